import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from nesthilb.exactcore import kernels
from nesthilb.exactcore.field import DEFAULT_PRIME

P = DEFAULT_PRIME

needs_compiled = pytest.mark.skipif(kernels.compiled_backend is None,
                                    reason="compiled kernel not built")

matrices = st.integers(1, 8).flatmap(
    lambda n: st.integers(1, 10).flatmap(
        lambda m: st.lists(st.lists(st.integers(0, P - 1) | st.just(0), min_size=m, max_size=m),
                           min_size=n, max_size=n)))


@needs_compiled
@given(matrices)
@settings(max_examples=100, deadline=None)
def test_rref_agrees(rows):
    ncols = len(rows[0])
    assert kernels.compiled_backend.rref_modp(rows, ncols, P) == \
        kernels.python_backend.rref_modp(rows, ncols, P)


@needs_compiled
@given(matrices, matrices)
@settings(max_examples=60, deadline=None)
def test_reduce_agrees(basis_rows, vecs):
    ncols = len(basis_rows[0])
    vecs = [(v + [0] * ncols)[:ncols] for v in vecs]
    basis, pivots = kernels.python_backend.rref_modp(basis_rows, ncols, P)
    assert kernels.compiled_backend.reduce_modp(vecs, basis, pivots, ncols, P) == \
        kernels.python_backend.reduce_modp(vecs, basis, pivots, ncols, P)


def test_small_prime_pivots():
    rows = [[2, 4, 1], [1, 2, 4]]
    basis, pivots = kernels.python_backend.rref_modp(rows, 3, 5)
    assert pivots == [0, 2] and basis == [[1, 2, 0], [0, 0, 1]]


SCRIPT = """
import json
from nesthilb.exactcore.kernels import BACKEND
from nesthilb.ideal import PunctualIdeal
from nesthilb.exactcore.field import Field
from nesthilb.resolution import resolution_report
from nesthilb.tangent import census
I = PunctualIdeal.max_power(Field.prime(), 3)
rep = resolution_report(I)
dims = [r.constrained_dim for r in census([0, 1], 3, Field.prime())]
print(json.dumps({"backend": BACKEND, "rep": rep, "dims": dims}, default=str))
"""


def _run(pure):
    env = dict(os.environ)
    env.pop("NESTHILB_PURE_PYTHON", None)
    if pure:
        env["NESTHILB_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True,
                         text=True, check=True)
    return json.loads(out.stdout)


def _extension_built():
    import importlib.util
    return importlib.util.find_spec("nesthilb.exactcore._kernels") is not None


def test_pure_python_switch():
    pure = _run(True)
    assert pure["backend"] == "python"
    default = _run(False)
    assert default["backend"] == ("cython" if _extension_built() else "python")
    assert pure["rep"] == default["rep"] and pure["dims"] == default["dims"]
