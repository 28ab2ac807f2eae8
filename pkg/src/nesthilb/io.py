"""JSON file formats for ideals and chains.

Ideal file::

    {"field": {"type": "prime", "p": 32003},
     "pieces": [{"point": [0, 0], "generators": ["x^2+3*x*y", "y^3"], "add_power": 4}]}

Generators are written in local coordinates centred at their point. A chain
file has the same ``field`` entry and ``"ideals": [{"pieces": [...]}, ...]``.
"""

import json
from fractions import Fraction

from .errors import InvariantViolation, NotFiniteColength, ParseError
from .exactcore.field import Field
from .exactcore.poly import TruncPoly
from .ideal import PunctualIdeal, ZeroDimIdeal
from .nest import NestChain


def scalar_to_json(field, c):
    s = field.signed(c)
    if isinstance(s, Fraction):
        return s.numerator if s.denominator == 1 else f"{s.numerator}/{s.denominator}"
    return s


def point_to_json(field, p):
    return [scalar_to_json(field, c) for c in p]


def _scalar(field, v, where):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"{where}: expected an integer or 'a/b' string", field=where)
    try:
        return field(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: {exc}", field=where) from None


def _field_of(obj, where="field"):
    if obj is None:
        return Field.prime()
    try:
        return Field.from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"{where}: {exc}", field=where) from None


def _piece(field, obj, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object", field=where)
    unknown = set(obj) - {"point", "generators", "add_power"}
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}", field=where)
    pt = obj.get("point", [0, 0])
    if not isinstance(pt, list) or len(pt) != 2:
        raise ParseError(f"{where}.point: expected two coordinates", field=f"{where}.point")
    point = tuple(_scalar(field, v, f"{where}.point[{k}]") for k, v in enumerate(pt))
    gens_raw = obj.get("generators", [])
    if not isinstance(gens_raw, list):
        raise ParseError(f"{where}.generators: expected a list", field=f"{where}.generators")
    gens = []
    for k, g in enumerate(gens_raw):
        w = f"{where}.generators[{k}]"
        try:
            gens.append(TruncPoly.parse(g, field))
        except ParseError as exc:
            raise ParseError(f"{w}: {exc}", position=exc.position, field=w) from None
    power = obj.get("add_power")
    if power is not None and (isinstance(power, bool) or not isinstance(power, int) or power < 0):
        raise ParseError(f"{where}.add_power: expected a non-negative integer",
                         field=f"{where}.add_power")
    if any(g.constant_term() != 0 for g in gens):
        raise InvariantViolation("punctual", f"{where}: generators must vanish at the point")
    if not gens and power is None:
        raise ParseError(f"{where}: needs generators or add_power", field=where)
    try:
        local = PunctualIdeal.from_generators(gens, power, field=field)
    except NotFiniteColength as exc:
        raise InvariantViolation("finite_colength", f"{where}: {exc}") from None
    return point, local


def _ideal(field, obj, where):
    if not isinstance(obj, dict) or not isinstance(obj.get("pieces"), list):
        raise ParseError(f"{where}: expected an object with a 'pieces' list", field=where)
    pieces = {}
    for k, pc in enumerate(obj["pieces"]):
        point, local = _piece(field, pc, f"{where}.pieces[{k}]")
        if point in pieces:
            raise InvariantViolation("support", f"{where}: point {list(point)} appears twice")
        pieces[point] = local
    return ZeroDimIdeal(field, pieces)


def load_json(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}",
                         position=exc.pos) from None


def parse_document(obj, field=None, check=True):
    """ZeroDimIdeal or NestChain from a decoded JSON document."""
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    file_field = _field_of(obj.get("field"))
    field = field or file_field
    if "pieces" in obj and "ideals" in obj:
        raise ParseError("document has both 'pieces' and 'ideals'")
    if "pieces" in obj:
        return _ideal(field, obj, "$")
    if "ideals" in obj:
        if not isinstance(obj["ideals"], list) or not obj["ideals"]:
            raise ParseError("$.ideals: expected a nonempty list", field="$.ideals")
        ideals = [_ideal(field, o, f"$.ideals[{k}]") for k, o in enumerate(obj["ideals"])]
        return NestChain.checked(ideals) if check else NestChain(ideals)
    raise ParseError("document needs 'pieces' (an ideal) or 'ideals' (a chain)")


def parse_input(path, field=None, check=True):
    """Read an ideal or chain file, verifying all invariants on load."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_document(load_json(text, str(path)), field, check)


def ideal_to_json(I, with_field=True):
    field = I.field
    pieces = []
    for p, local in I.pieces.items():
        pieces.append({"point": point_to_json(field, p),
                       "generators": local.generator_strings(),
                       "add_power": local.colength})
    out = {"pieces": pieces}
    if with_field:
        out = {"field": field.to_json(), **out}
    return out


def chain_to_json(chain):
    return {"field": chain.field.to_json(),
            "ideals": [ideal_to_json(I, with_field=False) for I in chain.ideals]}
