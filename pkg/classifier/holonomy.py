"""
Infinitesimal holonomy at a point.

The algebra is generated by the curvature endomorphisms R(e_a, e_b), their
first and second covariant derivatives, closed under commutators. Vectors and
symmetric 2-tensors annihilated by the whole algebra are candidates for
parallel fields; nothing here proves that such a field exists on a domain.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import numpy as np

from config import TOLERANCE_CONFIG
from exceptions import JetBudgetError
from logger import get_logger
from performance_monitor import performance_decorator

logger = get_logger()

NULL = "null"
TIMELIKE = "timelike"
SPACELIKE = "spacelike"


@dataclass(frozen=True)
class KernelVector:
    vector: Tuple[float, ...]
    norm: float  # g(v, v) for unit Euclidean v
    character: str


@dataclass(frozen=True)
class HolonomyReport:
    generator_count: int
    algebra_dimension: int
    kernel: Tuple[KernelVector, ...]
    kernel_residual: float
    sym2_kernel_dimension: int  # modulo span{g}
    contains_null: bool

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel)

    @property
    def characters(self) -> List[str]:
        return [v.character for v in self.kernel]


def causal_character(norm: float, threshold: float = TOLERANCE_CONFIG["null_threshold"]) -> str:
    if abs(norm) <= threshold:
        return NULL
    return TIMELIKE if norm < 0 else SPACELIKE


def curvature_generators(data) -> List[np.ndarray]:
    """Matrices M^m_n of R(e_a,e_b), (nabla_c R)(e_a,e_b) and (nabla_d nabla_c R)(e_a,e_b)."""
    if not data.has_derivative(2):
        raise JetBudgetError(f"holonomy needs nabla nabla R (metric order {data.order})")
    n = data.dim
    r_ud = data.riemann_ud.values()
    d1 = data.derivative(1).values()
    d2 = data.derivative(2).values()
    generators = []
    for a, b in combinations(range(n), 2):
        generators.append(r_ud[:, :, a, b])
        generators.extend(d1[c, :, :, a, b] for c in range(n))
        generators.extend(d2[d, c, :, :, a, b] for d in range(n) for c in range(n))
    return generators


def _row_basis(rows: np.ndarray, relative: float) -> np.ndarray:
    """Orthonormal basis of the row space, ranks decided relative to the largest singular value."""
    if rows.size == 0:
        return rows
    _, singular, vt = np.linalg.svd(rows, full_matrices=False)
    if singular[0] == 0.0:
        return rows[:0]
    rank = int(np.sum(singular > relative * singular[0]))
    return vt[:rank]


def close_under_commutators(generators: List[np.ndarray], n: int,
                            relative: float = TOLERANCE_CONFIG["svd_relative"]) -> List[np.ndarray]:
    """Basis of the Lie algebra spanned by ``generators``; at most n(n-1)/2 closure rounds."""
    if not generators:
        return []
    basis = _row_basis(np.array([m.ravel() for m in generators]), relative)
    for _ in range(n * (n - 1) // 2):
        mats = [row.reshape(n, n) for row in basis]
        brackets = [(x @ y - y @ x).ravel() for x, y in combinations(mats, 2)]
        if not brackets:
            break
        grown = _row_basis(np.vstack([basis, np.array(brackets)]), relative)
        if len(grown) == len(basis):
            break
        basis = grown
    return [row.reshape(n, n) for row in basis]


def common_kernel(matrices: List[np.ndarray], n: int,
                  relative: float = TOLERANCE_CONFIG["svd_relative"]) -> np.ndarray:
    """Rows spanning {v : M v = 0 for every M}, unit Euclidean length."""
    if not matrices:
        return np.eye(n)
    _, singular, vt = np.linalg.svd(np.vstack(matrices))
    if singular[0] == 0.0:
        return np.eye(n)
    rank = int(np.sum(singular > relative * singular[0]))
    return vt[rank:]


def sym2_kernel_dimension(matrices: List[np.ndarray], n: int,
                          relative: float = TOLERANCE_CONFIG["svd_relative"]) -> int:
    """Dimension of symmetric h_mn with -M^r_m h_rn - M^r_n h_mr = 0 for every M."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    if not matrices:
        return len(pairs)
    upper = np.triu_indices(n)
    columns = []
    for i, j in pairs:
        h = np.zeros((n, n))
        h[i, j] = h[j, i] = 1.0
        columns.append(np.concatenate([-(m.T @ h + h @ m)[upper] for m in matrices]))
    action = np.array(columns).T
    singular = np.linalg.svd(action, compute_uv=False)
    if singular[0] == 0.0:
        return len(pairs)
    return len(pairs) - int(np.sum(singular > relative * singular[0]))


def _contains_null(kernel: np.ndarray, g: np.ndarray, threshold: float) -> bool:
    """True iff g restricted to the kernel is degenerate or indefinite."""
    if len(kernel) == 0:
        return False
    restricted = np.linalg.eigvalsh(kernel @ g @ kernel.T)
    bound = threshold * max(1.0, float(np.max(np.abs(restricted))))
    if np.any(np.abs(restricted) <= bound):
        return True
    return bool(restricted.min() < 0.0 < restricted.max())


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    return -v if v[np.argmax(np.abs(v))] < 0 else v


@performance_decorator("holonomy_kernel")
def holonomy_kernel(data, relative: float = TOLERANCE_CONFIG["svd_relative"],
                    null_threshold: float = TOLERANCE_CONFIG["null_threshold"]) -> HolonomyReport:
    """Holonomy algebra, tangent kernel with causal characters and Sym^2 kernel at one point."""
    n = data.dim
    g = data.frame.g.values()
    raw = curvature_generators(data)
    largest = max((np.linalg.norm(m) for m in raw), default=0.0)
    floor = max(TOLERANCE_CONFIG["tol_abs"], relative * largest)
    generators = [m / np.linalg.norm(m) for m in raw if np.linalg.norm(m) > floor]

    algebra = close_under_commutators(generators, n, relative)
    kernel = np.array([_canonical_sign(v) for v in common_kernel(algebra, n, relative)]).reshape(-1, n)
    vectors = []
    for v in kernel:
        norm = float(v @ g @ v)
        vectors.append(KernelVector(tuple(float(x) for x in v), norm, causal_character(norm, null_threshold)))
    residual = max((float(np.max(np.abs(m @ v))) for m in generators for v in kernel), default=0.0)
    sym2 = sym2_kernel_dimension(algebra, n, relative)

    report = HolonomyReport(
        generator_count=len(generators),
        algebra_dimension=len(algebra),
        kernel=tuple(vectors),
        kernel_residual=residual,
        sym2_kernel_dimension=max(sym2 - 1, 0),
        contains_null=_contains_null(kernel, g, null_threshold),
    )
    logger.debug(f"holonomy at {data.point}: algebra dim {report.algebra_dimension}, "
                 f"kernel dim {report.kernel_dimension}, null {report.contains_null}")
    return report
