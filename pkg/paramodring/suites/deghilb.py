"""Degenerate Hilbert modular forms: generators, boundary values, relation R and the ring audits."""

from fractions import Fraction

from paramodring.config import settings
from paramodring.forms import deghilb
from paramodring.forms.classical import delta, eisenstein, eta_power, gamma2_e1, gamma2_e2
from paramodring.gralg.graded import dimension_by_rank, hironaka_audit, relations_in_weight
from paramodring.gralg.hilbert import A_STAR_SERIES, A_SYM_SERIES
from paramodring.gralg.presets import build_preset

RANK_KMAX = 20


def _T() -> Fraction:
    return Fraction(settings.deghilb_window)


def eta_factorisation():
    T = Fraction(20)
    e1, e2 = gamma2_e1(T).expansion, gamma2_e2(T).expansion
    rhs = ((e1 + e2) * (e1.scale(2) - e2) * (e2.scale(2) - e1)).scale(Fraction(1, 54))
    ok = rhs.agrees_with(eta_power(12, T).expansion)
    return ok, "(e1 + e2)(2e1 - e2)(2e2 - e1)/54 differs from eta^12"


def delta6_dual_construction():
    T = Fraction(10)
    ok = deghilb.Delta6(T).expansion.agrees_with(deghilb.Delta6_from_f(T).expansion)
    return ok, "eta^12 (x) eta^12 differs from the product of the three f-combinations"


def generator_symmetries():
    T = _T()
    got = {g.label: g.symmetry for g in (deghilb.X2(T), deghilb.X4(T), deghilb.Delta6(T), deghilb.X8(T))}
    expected = {
        "X2": deghilb.SYMMETRIC, "X4": deghilb.SYMMETRIC,
        "Delta6": deghilb.SYMMETRIC, "X8": deghilb.ANTISYMMETRIC,
    }
    x8 = deghilb.X8(T).expansion
    ok = got == expected and deghilb.symmetrize(x8).is_zero() and deghilb.antisymmetrize(x8) == x8
    return ok, f"symmetries {got}"


def relation_R_holds():
    residual = deghilb.relation_R_residual(_T())
    return residual.is_zero(), f"X8^2 - R leaves {residual!r}"


def relation_R_perturbation_detected():
    perturbed = dict(deghilb.RELATION_R)
    perturbed[(0, 4, 0)] = 4095
    residual = deghilb.relation_R_residual(_T(), perturbed)
    return not residual.is_zero(), "changing 4096 to 4095 left the residual at zero"


def boundary_values():
    T = _T()
    e1, e2 = gamma2_e1(T).expansion, gamma2_e2(T).expansion
    eta8 = eta_power(8, T).expansion
    cases = [
        ("X2", deghilb.phi(1, deghilb.X2(T)), e1),
        ("X4", deghilb.phi(1, deghilb.X4(T)), (e1.scale(Fraction(1, 2)) - e2) ** 2 * Fraction(1, 144)),
        ("X8", deghilb.phi(1, deghilb.X8(T)), eta8 * eta8.substitute_scale(2)),
    ]
    for label, got, expected in cases:
        if not got.agrees_with(expected):
            return False, f"Phi({label}) = {got!r}"
    for which in (1, 2):
        if not deghilb.phi(which, deghilb.Delta6(T)).is_zero():
            return False, f"Phi_{which}(Delta6) is not zero"
    return True, ""


def boundary_multiplicative():
    T = _T()
    x2, x4 = deghilb.X2(T), deghilb.X4(T)
    ok = deghilb.phi(2, x2 * x4).agrees_with(deghilb.phi(2, x2) * deghilb.phi(2, x4))
    return ok, "Phi(X2 X4) differs from Phi(X2) Phi(X4)"


def diagonal_restrictions():
    T = _T()
    x2 = deghilb.diagonal_restriction(deghilb.X2(T))
    d6 = deghilb.diagonal_restriction(deghilb.Delta6(T))
    x4 = deghilb.diagonal_restriction(deghilb.X4(T))
    ok = x2.agrees_with(eisenstein(4, T).expansion) and d6.agrees_with(delta(T).expansion) and x4.is_zero()
    return ok, f"diagonal restrictions X2 -> {x2!r}, Delta6 -> {d6!r}, X4 -> {x4!r}"


def a_star_boundaries():
    T = _T()
    gens = {g.label: g for g in deghilb.a_star_generators(T)}
    e4 = deghilb.rescaled_boundary(1, gens["X2^2-48X4"])
    d = deghilb.rescaled_boundary(1, gens["X4*X8"])
    if not e4.agrees_with(eisenstein(4, T).expansion):
        return False, f"rescaled boundary of X2^2-48X4 is {e4!r}"
    if not d.agrees_with(delta(T).expansion):
        return False, f"rescaled boundary of X4*X8 is {d!r}"
    for label in ("Delta6", "X2*Delta6", "X4*Delta6", "Delta6*X8", "X2*Delta6*X8"):
        if not deghilb.phi(1, gens[label]).is_zero():
            return False, f"cusp generator {label} has a nonzero boundary"
    return True, ""


def a_star_membership_examples():
    T = _T()
    x2, x4, d6 = deghilb.X2(T), deghilb.X4(T), deghilb.Delta6(T)
    got = (
        deghilb.a_star_membership(x2 * x2 - x4 * 48),
        deghilb.a_star_membership(x2),
        deghilb.a_star_membership(d6),
    )
    return got == (True, False, True), f"membership of X2^2-48X4, X2, Delta6: {got}"


def _ranks_against(preset: str, series):
    gens = build_preset(preset, RANK_KMAX)
    expected = series.expand(RANK_KMAX)
    for k in range(0, RANK_KMAX + 1, 2):
        r = dimension_by_rank(gens, k)
        if r != expected[k]:
            return False, f"weight {k}: rank {r}, Hilbert series {expected[k]}"
    return True, f"even weights up to {RANK_KMAX}"


def a_sym_ranks():
    return _ranks_against("Asym", A_SYM_SERIES)


def a_star_ranks():
    return _ranks_against("Astar", A_STAR_SERIES)


def hironaka_decomposition():
    mg = build_preset("MG", 16)
    free = mg.subset(["X2", "X4", "Delta6"])
    module = mg.subset(["X8"])
    table = hironaka_audit(free, module, 16)
    bad = [row for row in table if not row["match"]]
    if bad:
        return False, f"weight {bad[0]['weight']}: predicted {bad[0]['predicted']}, rank {bad[0]['rank']}"
    return table[10]["rank"] == 6 and table[0]["rank"] == 1, "dimensions at weights 0 and 10"


def relation_R_unique():
    mg = build_preset("MG", 16)
    for k in range(2, 16, 2):
        if relations_in_weight(mg, k):
            return False, f"unexpected relation in weight {k}"
    found = relations_in_weight(mg, 16)
    if len(found) != 1:
        return False, f"{len(found)} relations in weight 16"
    relation = dict(found[0])
    lead = relation.get((0, 0, 0, 2))
    if not lead:
        return False, "weight-16 relation does not involve X8^2"
    expected = {(0, 0, 0, 2): 1}
    for (a, b, d), c in deghilb.RELATION_R.items():
        expected[(a, b, d, 0)] = -c
    normalised = {m: c / lead for m, c in relation.items()}
    return normalised == expected, f"weight-16 relation {normalised}"


CHECKS = [
    ("deghilb.eta_factorisation", eta_factorisation),
    ("deghilb.delta6_dual_construction", delta6_dual_construction),
    ("deghilb.generator_symmetries", generator_symmetries),
    ("deghilb.relation_R", relation_R_holds),
    ("deghilb.relation_R_perturbed", relation_R_perturbation_detected),
    ("deghilb.boundary_values", boundary_values),
    ("deghilb.boundary_multiplicative", boundary_multiplicative),
    ("deghilb.diagonal_restrictions", diagonal_restrictions),
    ("deghilb.a_star_boundaries", a_star_boundaries),
    ("deghilb.a_star_membership", a_star_membership_examples),
    ("deghilb.a_sym_ranks", a_sym_ranks),
    ("deghilb.a_star_ranks", a_star_ranks),
    ("deghilb.hironaka_audit", hironaka_decomposition),
    ("deghilb.relation_R_unique", relation_R_unique),
]
