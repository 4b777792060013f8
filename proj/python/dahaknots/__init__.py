"""Exact two-variable cable polynomials with a colored-Jones cross-check."""

try:
    from . import _dahaknots as _impl  # installed wheel layout
except ImportError:  # plain CMake build: module sits on sys.path
    import _dahaknots as _impl

PolyQT = _impl.PolyQT
UsageError = _impl.UsageError
PoleError = _impl.PoleError
q = _impl.q
t = _impl.t
constant = _impl.constant
macdonald_poly = _impl.macdonald_poly
sign_macdonald_poly = _impl.sign_macdonald_poly
cherednik_torus = _impl.cherednik_torus
sign_torus = _impl.sign_torus
iterated_topological = _impl.iterated_topological
cd_newton = _impl.cd_newton
oracle_jones = _impl.oracle_jones
newton_to_topological = _impl.newton_to_topological
verify = _impl.verify
selftest = _impl.selftest

__all__ = [
    "PolyQT",
    "UsageError",
    "PoleError",
    "q",
    "t",
    "constant",
    "macdonald_poly",
    "sign_macdonald_poly",
    "cherednik_torus",
    "sign_torus",
    "iterated_topological",
    "cd_newton",
    "oracle_jones",
    "newton_to_topological",
    "verify",
    "selftest",
]
