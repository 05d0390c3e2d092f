"""Built-in identity suites run by ``weiljet verify-identities``.

Each suite returns a ``Report``; ``cap`` bounds the cube order or the
equalizer size.
"""

from __future__ import annotations

from .infinitesimal import brace, brace_n, check_inclusions, cube, paren
from .limits import cube_equalizer, limit_subspace, nil_equalizer, standard_qcr, symmetric_equalizer
from .prolong import ProlongedPoint, simplicial_d, simplicial_s
from .report import Report, describe_difference

SUITES = ("simplicial", "limits", "inclusions", "qcr")


def _agree(report: Report, name: str, lhs: ProlongedPoint, rhs: ProlongedPoint) -> None:
    diff = lhs.first_difference(rhs)
    report.add(name, diff is None, describe_difference(diff))


def simplicial_suite(cap: int = 3) -> Report:
    """Face and degeneracy identities on generic points over ``D^k``, ``k <= cap``.

    There are only ``k+1`` faces out of ``D^k``-points, so the relations are the
    cubical ones: ``d_(j+1) s_j`` equals ``s_j d_j``, not the identity (see
    ``shifted_face_defect``).
    """
    report = Report(f"simplicial identities, cube order <= {cap}")
    d, s = simplicial_d, simplicial_s
    for k in range(cap + 1):
        p = ProlongedPoint.symbolic(cube(k).algebra, (0,))
        tag = f"D^{k}: "
        # d_i d_j = d_(j-1) d_i, i < j, on points over D^k
        for j in range(1, k + 1):
            for i in range(1, j):
                _agree(report, f"{tag}d{i} d{j} = d{j - 1} d{i}", d(d(p, j), i), d(d(p, i), j - 1))
        # s_i s_j = s_(j+1) s_i, i <= j
        for j in range(1, k + 2):
            for i in range(1, j + 1):
                _agree(report, f"{tag}s{i} s{j} = s{j + 1} s{i}", s(s(p, j), i), s(s(p, i), j + 1))
        for j in range(1, k + 2):
            for i in range(1, k + 2):
                lhs = d(s(p, j), i)
                if i < j:
                    _agree(report, f"{tag}d{i} s{j} = s{j - 1} d{i}", lhs, s(d(p, i), j - 1))
                elif i == j:
                    _agree(report, f"{tag}d{i} s{j} = id", lhs, p)
                else:
                    _agree(report, f"{tag}d{i} s{j} = s{j} d{i - 1}", lhs, s(d(p, i - 1), j))
    return report


def shifted_face_defect(cap: int = 3) -> Report:
    """``d_(j+1) s_j = id`` checked literally; it fails whenever ``k >= 1``."""
    report = Report(f"d_(j+1) s_j = id, cube order <= {cap}")
    for k in range(1, cap + 1):
        p = ProlongedPoint.symbolic(cube(k).algebra, (0,))
        for j in range(1, k + 1):
            _agree(report, f"D^{k}: d{j + 1} s{j} = id", simplicial_d(simplicial_s(p, j), j + 1), p)
    return report


def limits_suite(cap: int = 3) -> Report:
    """The three equalizer diagrams; the symmetric one runs one order further."""
    report = Report(f"equalizer diagrams, order <= {cap}")
    families = [
        ("cube equalizer", cube_equalizer, cap),
        ("line equalizer", nil_equalizer, cap),
        ("symmetric equalizer", symmetric_equalizer, cap + 1),
    ]
    for label, build, top in families:
        for n in range(1, top + 1):
            v = limit_subspace(*build(n))
            report.add(f"{label} n={n}", v.is_limit, None if v.is_limit else v.verdict, v.certificate())
    return report


def inclusions_suite(cap: int = 3) -> Report:
    report = Report(f"inclusions among D(m)_n, m, n <= {cap}")
    for name, ok in check_inclusions(cap, cap):
        report.add(name, ok)
    return report


def qcr_objects(cap: int = 3) -> list:
    objs = [cube(2), paren(2), paren(3), brace_n(3, 2), brace(3, [(1, 3), (2, 3)]),
            brace(3, [(1, 2)]), brace(3, [(1, 2), (1, 3)])]
    if cap >= 4:
        objs += [cube(4), paren(4), brace_n(4, 2), brace_n(4, 3), brace(4, [(1, 2), (3, 4)])]
    return objs


def qcr_suite(cap: int = 3) -> Report:
    report = Report("standard representations certify as limits")
    for obj in qcr_objects(cap):
        v = standard_qcr(obj).verdict
        report.add(f"standard representation of {obj}", v.is_limit,
                   None if v.is_limit else v.verdict, v.certificate())
    return report


RUNNERS = {
    "simplicial": simplicial_suite,
    "limits": limits_suite,
    "inclusions": inclusions_suite,
    "qcr": qcr_suite,
}


def run_suites(only: str | None = None, cap: int = 3) -> Report:
    names = SUITES if only is None else (only,)
    report = Report("identity suite")
    for name in names:
        report.extend(RUNNERS[name](cap), prefix=f"{name}: ")
    return report
