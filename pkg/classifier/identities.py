"""
Quadratic curvature identities of 2-symmetric and semisymmetric spaces,
evaluated on the values of R, nabla R, C, Ricci and their gradients at a point.

Every identity returns a residual array that vanishes in exact arithmetic
when the space has the property the identity belongs to; the residual is
zero-tested against the product of the magnitudes of its factors.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from curvature import move_indices
from exceptions import JetBudgetError
from invariants import Tolerance, max_abs
from performance_monitor import performance_decorator

SLOT_LETTERS = "abcdefgh"

SEMISYMMETRIC = "semisymmetric"
TWO_SYMMETRIC = "two_symmetric"


@dataclass(frozen=True)
class IdentityResult:
    name: str
    holds_in: str
    residual: float
    scale: float
    passed: bool


def curvature_action(r_ud: np.ndarray, t: np.ndarray) -> np.ndarray:
    """sum_i R^r_{a_i l m} T_{a_1 .. r .. a_q}, indexed [l, m, a_1, ..., a_q]."""
    idx = SLOT_LETTERS[:t.ndim]
    total = np.zeros((r_ud.shape[0],) * 2 + t.shape)
    for slot in range(t.ndim):
        replaced = idx[:slot] + "r" + idx[slot + 1:]
        total += np.einsum(f"r{idx[slot]}lm,{replaced}->lm{idx}", r_ud, t)
    return total


def _gradient_action(d_r_ud: np.ndarray, t: np.ndarray) -> np.ndarray:
    """sum_i nabla_n R^r_{a_i l m} T_{.. r ..}, indexed [n, l, m, a_1, ...]."""
    idx = SLOT_LETTERS[:t.ndim]
    total = np.zeros((d_r_ud.shape[0],) * 3 + t.shape)
    for slot in range(t.ndim):
        replaced = idx[:slot] + "r" + idx[slot + 1:]
        total += np.einsum(f"nr{idx[slot]}lm,{replaced}->nlm{idx}", d_r_ud, t)
    return total


def _transport(r_ud, d_r_ud, t, d_t) -> Tuple[np.ndarray, float]:
    """sum_i nabla_n R^r_{a_i l m} T_{..r..} - R^r_{n l m} nabla_r T, for T with nabla nabla T = 0."""
    idx = SLOT_LETTERS[:t.ndim]
    residual = _gradient_action(d_r_ud, t) - np.einsum(f"rnlm,r{idx}->nlm{idx}", r_ud, d_t)
    return residual, max(max_abs(d_r_ud) * max_abs(t), max_abs(r_ud) * max_abs(d_t))


def _symmetrized_gradient(d_r_ud: np.ndarray) -> np.ndarray:
    """nabla_n R^r_{t l m} + nabla_t R^r_{n l m}, indexed [n, t, r, l, m]."""
    return np.einsum("nrtlm->ntrlm", d_r_ud) + np.einsum("trnlm->ntrlm", d_r_ud)


def _annihilates(sym_grad, d_r_ud, d_t) -> Tuple[np.ndarray, float]:
    idx = SLOT_LETTERS[:d_t.ndim - 1]
    return np.einsum(f"ntrlm,r{idx}->ntlm{idx}", sym_grad, d_t), 2 * max_abs(d_r_ud) * max_abs(d_t)


def _ricci_gradient_pair(d_ric, g_inv, d_t) -> Tuple[Tuple[np.ndarray, float], Tuple[np.ndarray, float]]:
    """(nabla_n R^r_m - nabla_m R^r_n) nabla_r T and (nabla^r R_mn - 2 nabla_n R^r_m) nabla_r T."""
    idx = SLOT_LETTERS[:d_t.ndim - 1]
    d_ric_mixed = move_indices(d_ric, g_inv, (1,))   # [n, r, m] = nabla_n R^r_m
    d_ric_up = move_indices(d_ric, g_inv, (0,))      # [r, m, n] = nabla^r R_mn
    antisym = np.einsum("nrm->nmr", d_ric_mixed) - np.einsum("mrn->nmr", d_ric_mixed)
    trace = np.einsum("rmn->mnr", d_ric_up) - 2.0 * np.einsum("nrm->mnr", d_ric_mixed)
    scale = 3.0 * max_abs(g_inv) * max_abs(d_ric) * max_abs(d_t)
    return ((np.einsum(f"nmr,r{idx}->nm{idx}", antisym, d_t), scale),
            (np.einsum(f"mnr,r{idx}->mn{idx}", trace, d_t), scale))


def _cyclic_last_three(x: np.ndarray) -> np.ndarray:
    """x[m,a,b,g] + x[m,b,g,a] + x[m,g,a,b]."""
    return x + np.einsum("mbga->mabg", x) + np.einsum("mgab->mabg", x)


def weyl_quadratic_terms(c_dn, ric, g_inv) -> Dict[str, np.ndarray]:
    """Pieces of the Weyl-quadratic identity before their coefficients, indexed [a, b, g, d, l, m].

    Each piece is antisymmetrized in [a b] (and in [l m] where it carries a
    Ricci or delta factor) and symmetrized under the pair swap (ab) <-> (gd).
    """
    n = c_dn.shape[0]
    c_ud = move_indices(c_dn, g_inv, (0,))             # C^r_{bgd}
    c_dduu = move_indices(c_dn, g_inv, (2, 3))         # C_{ra}^{lm}
    ric_mixed = move_indices(ric, g_inv, (1,))         # R_a^l
    delta = np.eye(n)

    def anti(x, first, second):
        return 0.5 * (x - np.swapaxes(x, first, second))

    def piece(x, both_pairs=True):
        y = anti(anti(x, 4, 5), 0, 1) if both_pairs else anti(x, 0, 1)
        return y + np.transpose(y, (2, 3, 0, 1, 4, 5))

    return {
        "weyl_weyl": piece(np.einsum("ralm,rbgd->abgdlm", c_dduu, c_ud), both_pairs=False),
        "ricci_weyl": piece(np.einsum("al,mbgd->abgdlm", ric_mixed, c_ud)),
        "ricci_delta_weyl": piece(np.einsum("rl,ma,rbgd->abgdlm", ric_mixed, delta, c_ud)),
        "delta_weyl": piece(np.einsum("la,mbgd->abgdlm", delta, c_ud)),
    }


def _weyl_quadratic(c_dn, ric, scalar, g_inv, n) -> Tuple[np.ndarray, float]:
    """Curvature action on C with R replaced by its Weyl decomposition, times (n - 2).

    The R_r^[l delta^m]_[a C^r_b] term carries +2, the sign that comes out of
    expanding R.C = 0 through the Weyl decomposition; written with -2 the
    identity does not hold on a flat factor times a round sphere.
    """
    terms = weyl_quadratic_terms(c_dn, ric, g_inv)
    total = ((n - 2) * terms["weyl_weyl"]
             - 2.0 * terms["ricci_weyl"]
             + 2.0 * terms["ricci_delta_weyl"]
             + (2.0 * scalar / (n - 1)) * terms["delta_weyl"])
    c_ud = move_indices(c_dn, g_inv, (0,))
    scale = n * max_abs(c_ud) * max(
        (n - 2) * max_abs(move_indices(c_dn, g_inv, (2, 3))),
        2.0 * n * max_abs(move_indices(ric, g_inv, (1,))),
        2.0 * abs(scalar) / (n - 1))
    return total, scale


def identity_residuals(data) -> Dict[str, Tuple[str, np.ndarray, float]]:
    """Residual arrays and scales by identity name; needs nabla R and nabla C."""
    if not data.has_derivative(1) or data.grad_weyl is None:
        raise JetBudgetError(f"identity suite needs nabla R (metric order {data.order})")
    n = data.dim
    g_inv = data.frame.g_inv.values()
    r_ud = data.riemann_ud.values()
    r_dn = data.riemann_down.values()
    d_r_ud = data.derivative(1).values()
    d_r_dn = data.lowered_values(1)
    ric = data.ricci.values()
    d_ric = data.grad_ricci().values()
    c_dn = data.weyl_down.values()
    d_c = data.grad_weyl.values()
    scalar = float(data.scalar.values())
    sym_grad = _symmetrized_gradient(d_r_ud)

    entries: Dict[str, Tuple[str, np.ndarray, float]] = {}

    def add(name, holds_in, result):
        residual, scale = result
        entries[name] = (holds_in, residual, scale)

    add("riemann_gradient_transport", TWO_SYMMETRIC, _transport(r_ud, d_r_ud, r_dn, d_r_dn))
    antisym, trace = _ricci_gradient_pair(d_ric, g_inv, d_r_dn)
    add("ricci_gradient_antisymmetric", TWO_SYMMETRIC, antisym)
    add("ricci_gradient_trace", TWO_SYMMETRIC, trace)

    add("riemann_gradient_transport_ricci", TWO_SYMMETRIC, _transport(r_ud, d_r_ud, ric, d_ric))
    antisym, trace = _ricci_gradient_pair(d_ric, g_inv, d_ric)
    add("ricci_gradient_antisymmetric_ricci", TWO_SYMMETRIC, antisym)
    add("ricci_gradient_trace_ricci", TWO_SYMMETRIC, trace)

    add("curvature_commutator", SEMISYMMETRIC,
        (curvature_action(r_ud, r_dn), 4 * max_abs(r_ud) * max_abs(r_dn)))
    add("curvature_commutator_gradient", TWO_SYMMETRIC,
        (curvature_action(r_ud, d_r_dn), 5 * max_abs(r_ud) * max_abs(d_r_dn)))

    add("symmetrized_gradient_riemann", TWO_SYMMETRIC, _annihilates(sym_grad, d_r_ud, d_r_dn))
    add("symmetrized_gradient_weyl", TWO_SYMMETRIC, _annihilates(sym_grad, d_r_ud, d_c))
    add("symmetrized_gradient_ricci", TWO_SYMMETRIC, _annihilates(sym_grad, d_r_ud, d_ric))

    add("ricci_riemann_symmetric", SEMISYMMETRIC, (
        np.einsum("rm,rnab->mnab", ric, r_ud) + np.einsum("rn,rmab->mnab", ric, r_ud),
        2 * max_abs(ric) * max_abs(r_ud)))
    add("ricci_riemann_cyclic", SEMISYMMETRIC, (
        _cyclic_last_three(np.einsum("rmab,gr->mabg", r_ud, ric)),
        3 * max_abs(ric) * max_abs(r_ud)))
    c_ud = move_indices(c_dn, g_inv, (0,))
    add("ricci_weyl_cyclic", SEMISYMMETRIC, (
        _cyclic_last_three(np.einsum("rmab,gr->mabg", c_ud, ric)),
        3 * max_abs(ric) * max_abs(c_ud)))
    ric_uu = move_indices(ric, g_inv, (0, 1))
    add("ricci_square_contraction", SEMISYMMETRIC, (
        np.einsum("rs,rmsn->mn", ric_uu, r_dn) - np.einsum("ma,ar,rn->mn", ric, g_inv, ric),
        max(max_abs(ric_uu) * max_abs(r_dn), max_abs(g_inv) * max_abs(ric) ** 2)))

    add("weyl_commutator", SEMISYMMETRIC, (curvature_action(r_ud, c_dn), 4 * max_abs(r_ud) * max_abs(c_dn)))
    if n >= 4:
        add("weyl_quadratic", SEMISYMMETRIC, _weyl_quadratic(c_dn, ric, scalar, g_inv, n))
    return entries


@performance_decorator("identity_suite")
def identity_suite(data, tolerance: Tolerance = Tolerance()) -> List[IdentityResult]:
    """Zero-tested residual of every identity, in a fixed order."""
    results = []
    for name, (holds_in, residual, scale) in identity_residuals(data).items():
        results.append(IdentityResult(
            name=name,
            holds_in=holds_in,
            residual=max_abs(residual),
            scale=float(scale),
            passed=tolerance.is_zero(residual, scale),
        ))
    return results


IDENTITY_NAMES: Tuple[str, ...] = (
    "riemann_gradient_transport",
    "ricci_gradient_antisymmetric",
    "ricci_gradient_trace",
    "riemann_gradient_transport_ricci",
    "ricci_gradient_antisymmetric_ricci",
    "ricci_gradient_trace_ricci",
    "curvature_commutator",
    "curvature_commutator_gradient",
    "symmetrized_gradient_riemann",
    "symmetrized_gradient_weyl",
    "symmetrized_gradient_ricci",
    "ricci_riemann_symmetric",
    "ricci_riemann_cyclic",
    "ricci_weyl_cyclic",
    "ricci_square_contraction",
    "weyl_commutator",
    "weyl_quadratic",
)

