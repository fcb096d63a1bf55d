"""
Curvature invariants at a point.

Order-0 scalars (R, Ricci square, Kretschmann, Weyl square) are always
evaluated. The quadratic order-1 list (contractions of one curvature factor
with one gradient, and of two gradients) needs nabla R and therefore a metric
jet order of at least 3. Rank-2 entries are reported as matrices with both
indices down, 1-forms as vectors with the index down.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from curvature import move_indices
from exceptions import JetBudgetError
from invariants.tolerance import Tolerance, factor_scale, max_abs

ORDER_ONE_ONE_FORMS = (
    "ricci_dot_grad_ricci",      # R^{mn} nabla_a R_{mn}
    "ricci_dot_div_ricci",       # R^{mn} nabla_m R_{na}
    "riemann_dot_grad_ricci",    # R^{mnr}_a nabla_m R_{nr}
    "riemann_dot_div_riemann",   # R^{mnrs} nabla_m R_{nrsa}
    "riemann_dot_grad_riemann",  # R^{mnrs} nabla_a R_{mnrs}
)

ORDER_ONE_TWO_TENSORS = (
    "grad_ricci_gram",           # nabla_a R^{mn} nabla_b R_{mn}
    "grad_ricci_mixed",          # nabla_m R_{nb} nabla_a R^{mn}
    "div_ricci_gram",            # nabla_m R_{na} nabla^m R^n_b
    "div_ricci_cross",           # nabla_m R_{na} nabla^n R^m_b
    "grad_ricci_grad_riemann",   # nabla^m R^{nr} nabla_a R_{brmn}
    "grad_ricci_div_riemann",    # nabla^m R^{nr} nabla_m R_{anbr}
    "grad_riemann_gram",         # nabla_a R^{mnrs} nabla_b R_{mnrs}
    "box_riemann_gram",          # nabla^s R^{mnr}_a nabla_s R_{mnrb}
    "grad_weyl_gram",
    "box_weyl_gram",
)


@dataclass(frozen=True)
class InvariantReport:
    scalars: Dict[str, float] = field(default_factory=dict)
    one_forms: Dict[str, np.ndarray] = field(default_factory=dict)
    two_tensors: Dict[str, np.ndarray] = field(default_factory=dict)
    scales: Dict[str, float] = field(default_factory=dict)
    order_one: bool = False

    def value(self, name: str):
        for table in (self.scalars, self.one_forms, self.two_tensors):
            if name in table:
                return table[name]
        raise KeyError(name)

    def names(self) -> List[str]:
        return sorted(set(self.scalars) | set(self.one_forms) | set(self.two_tensors))

    def magnitude(self, name: str) -> float:
        return max_abs(self.value(name))

    def vanishes(self, name: str, tolerance: Tolerance) -> bool:
        return tolerance.is_zero(self.value(name), self.scales[name])

    def listed_names(self) -> List[str]:
        """Order-1 entries of the quadratic list, their Weyl forms and the traces."""
        if not self.order_one:
            return []
        names = list(ORDER_ONE_ONE_FORMS) + list(ORDER_ONE_TWO_TENSORS)
        return names + [f"{name}_trace" for name in ORDER_ONE_TWO_TENSORS]

    def nonvanishing_listed(self, tolerance: Tolerance) -> List[str]:
        return [name for name in self.listed_names() if not self.vanishes(name, tolerance)]

    def max_magnitude(self) -> Tuple[str, float]:
        """Name and size of the largest entry relative to its scale."""
        best = ("", 0.0)
        for name in self.names():
            scale = self.scales[name]
            ratio = self.magnitude(name) / scale if scale > 0 else 0.0
            if ratio > best[1]:
                best = (name, ratio)
        return best


def scalar_invariants(data, strict: bool = True) -> InvariantReport:
    """Evaluate the invariant list at one point.

    With ``strict`` a missing nabla R raises the jet-budget error; otherwise
    only the order-0 part is reported.
    """
    g_inv = data.frame.g_inv.values()
    r_dn = data.riemann_down.values()
    r_uu = move_indices(r_dn, g_inv, (0, 1, 2, 3))
    ric = data.ricci.values()
    ric_uu = move_indices(ric, g_inv, (0, 1))
    c_dn = data.weyl_down.values()
    c_uu = move_indices(c_dn, g_inv, (0, 1, 2, 3))

    scalars: Dict[str, float] = {}
    one_forms: Dict[str, np.ndarray] = {}
    two_tensors: Dict[str, np.ndarray] = {}
    scales: Dict[str, float] = {}

    def put(table, name, subscripts, a, b):
        table[name] = np.einsum(subscripts, a, b)
        scales[name] = factor_scale((a, b))

    scalars["R"] = float(data.scalar.values())
    scales["R"] = factor_scale((g_inv, ric))
    put(scalars, "ricci_squared", "ab,ab->", ric_uu, ric)
    put(scalars, "kretschmann", "abcd,abcd->", r_uu, r_dn)
    put(scalars, "weyl_squared", "abcd,abcd->", c_uu, c_dn)

    if data.grad_scalar is not None:
        grad_r = data.grad_scalar.values()
        one_forms["grad_R"] = grad_r
        scales["grad_R"] = max(max_abs(grad_r), data.frame.scale)
        scalars["grad_R_squared"] = np.einsum("ab,a,b->", g_inv, grad_r, grad_r)
        scales["grad_R_squared"] = factor_scale((g_inv, grad_r, grad_r))

    order_one = data.has_derivative(1) and data.grad_weyl is not None
    if not order_one:
        if strict:
            raise JetBudgetError(f"order-1 invariants need nabla R (metric order {data.order})")
        return _finish(scalars, one_forms, two_tensors, scales, False)

    d_dn = data.lowered_values(1)
    d_ric = data.grad_ricci().values()
    r_uuud = move_indices(r_dn, g_inv, (0, 1, 2))
    d_ric_up_last = move_indices(d_ric, g_inv, (1, 2))
    d_ric_up_first = move_indices(d_ric, g_inv, (0, 1))
    d_ric_uuu = move_indices(d_ric, g_inv, (0, 1, 2))
    d_up = move_indices(d_dn, g_inv, (1, 2, 3, 4))
    d_box = move_indices(d_dn, g_inv, (0, 1, 2, 3))

    put(one_forms, "ricci_dot_grad_ricci", "mn,amn->a", ric_uu, d_ric)
    put(one_forms, "ricci_dot_div_ricci", "mn,mna->a", ric_uu, d_ric)
    put(one_forms, "riemann_dot_grad_ricci", "mnra,mnr->a", r_uuud, d_ric)
    put(one_forms, "riemann_dot_div_riemann", "mnrs,mnrsa->a", r_uu, d_dn)
    put(one_forms, "riemann_dot_grad_riemann", "mnrs,amnrs->a", r_uu, d_dn)

    put(two_tensors, "grad_ricci_gram", "amn,bmn->ab", d_ric_up_last, d_ric)
    put(two_tensors, "grad_ricci_mixed", "mnb,amn->ab", d_ric, d_ric_up_last)
    put(two_tensors, "div_ricci_gram", "mna,mnb->ab", d_ric, d_ric_up_first)
    put(two_tensors, "div_ricci_cross", "mna,nmb->ab", d_ric, d_ric_up_first)
    put(two_tensors, "grad_ricci_grad_riemann", "mnr,abrmn->ab", d_ric_uuu, d_dn)
    put(two_tensors, "grad_ricci_div_riemann", "mnr,manbr->ab", d_ric_uuu, d_dn)
    put(two_tensors, "grad_riemann_gram", "amnrs,bmnrs->ab", d_up, d_dn)
    put(two_tensors, "box_riemann_gram", "smnra,smnrb->ab", d_box, d_dn)

    dc = data.grad_weyl.values()
    put(two_tensors, "grad_weyl_gram", "amnrs,bmnrs->ab", move_indices(dc, g_inv, (1, 2, 3, 4)), dc)
    put(two_tensors, "box_weyl_gram", "smnra,smnrb->ab", move_indices(dc, g_inv, (0, 1, 2, 3)), dc)

    for name in ORDER_ONE_TWO_TENSORS:
        scalars[f"{name}_trace"] = float(np.einsum("ab,ab->", g_inv, two_tensors[name]))
        scales[f"{name}_trace"] = max_abs(g_inv) * scales[name]

    grad_k = 2.0 * one_forms["riemann_dot_grad_riemann"]
    one_forms["grad_kretschmann"] = grad_k
    scales["grad_kretschmann"] = 2.0 * scales["riemann_dot_grad_riemann"]
    scalars["grad_kretschmann_squared"] = float(np.einsum("ab,a,b->", g_inv, grad_k, grad_k))
    scales["grad_kretschmann_squared"] = max_abs(g_inv) * scales["grad_kretschmann"] ** 2
    return _finish(scalars, one_forms, two_tensors, scales, True)


def _finish(scalars, one_forms, two_tensors, scales, order_one) -> InvariantReport:
    scalars = {name: float(value) for name, value in scalars.items()}
    return InvariantReport(scalars, one_forms, two_tensors, scales, order_one)
