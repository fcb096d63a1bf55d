"""
Levi-Civita covariant derivatives of jet-valued tensors.
"""

from typing import List

from exceptions import JetBudgetError
from curvature.frame import MetricFrame
from jets import DOWN, UP, TensorJet, jet_einsum

INDEX_LETTERS = "abcdefghijkl"


def cov_derivative(t: TensorJet, frame: MetricFrame) -> TensorJet:
    """nabla_m t with the new index first; one jet order is consumed."""
    if t.order < 1:
        raise JetBudgetError(f"covariant derivative of an order-{t.order} rank-{t.rank} tensor")
    out_order = t.order - 1
    gamma = frame.christoffel
    if gamma.order < out_order:
        raise JetBudgetError(f"connection order {gamma.order} below required {out_order}")
    if t.rank > len(INDEX_LETTERS):
        raise JetBudgetError(f"rank {t.rank} exceeds supported tensor rank")

    data = t.partial().data.copy()
    idx = INDEX_LETTERS[:t.rank]
    for slot, kind in enumerate(t.valence):
        replaced = idx[:slot] + "s" + idx[slot + 1:]
        if kind == UP:
            data += jet_einsum(f"{idx[slot]}ms,{replaced}->m{idx}", gamma.data, t.data, t.dim, out_order)
        else:
            data -= jet_einsum(f"sm{idx[slot]},{replaced}->m{idx}", gamma.data, t.data, t.dim, out_order)
    return TensorJet(data, (DOWN,) + t.valence, t.dim, out_order)


def derivative_tower(riemann_ud: TensorJet, frame: MetricFrame, depth: int) -> List[TensorJet]:
    """[R, nabla R, ..., nabla^depth R]; depth is bounded by Riemann's jet order."""
    if depth > riemann_ud.order:
        raise JetBudgetError(
            f"nabla^{depth} Riemann needs metric order {depth + 2}, have {riemann_ud.order + 2}")
    tower = [riemann_ud]
    for _ in range(depth):
        tower.append(cov_derivative(tower[-1], frame))
    return tower
