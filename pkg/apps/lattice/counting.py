from apps.exact.scalars import format_rational

from .cosets import coset_min_norm
from .exceptions import NotMinimal


def count_roots_in_coset(node, j):
    """
    |H_j|: roots of E8 lying in j*alpha_i + L(i).

    `node` provides the E8 roots (`e8_roots`), the removed simple root
    (`removed_root`) and the sublattice `L`.
    """
    if not 1 <= j < node.n:
        raise ValueError(f'coset index {j} outside 1..{node.n - 1}')
    removed = node.removed_root
    return sum(
        1 for alpha in node.e8_roots
        if tuple(a - j * r for a, r in zip(alpha, removed)) in node.L
    )


def coset_root_counts(node):
    return tuple(count_roots_in_coset(node, j) for j in range(1, node.n))


def count_X_eta(root_system, gamma, eta):
    """
    Number of pairs (alpha, beta), alpha a root and beta minimal in gamma,
    with alpha + beta = eta. Raises NotMinimal unless eta is minimal in gamma.
    """
    minimum = coset_min_norm(gamma)
    lat = gamma.lattice
    eta = tuple(eta)
    if eta not in gamma or lat.norm(eta) != minimum.k:
        raise NotMinimal(detail={
            'eta': [format_rational(x) for x in eta],
            'minimum': format_rational(minimum.k),
        })
    minimal = set(minimum.reps)
    return sum(
        1 for alpha in root_system.roots
        if tuple(e - a for e, a in zip(eta, alpha)) in minimal
    )
