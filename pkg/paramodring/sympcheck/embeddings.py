"""Exact checks of the embeddings and special matrices used by the pullback operators."""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from paramodring.config import settings
from paramodring.core.complexq import ComplexRational
from paramodring.core.quadratic import QuadRational
from paramodring.errors import LevelError
from paramodring.sympcheck.matrices import (
    HalfSpacePoint, Mat4, conjugation, fricke_point, in_paramodular, moebius_1, moebius_act,
    translation,
)

logger = logging.getLogger(__name__)

S = ((0, -1), (1, 0))
T = ((1, 1), (0, 1))
T2 = ((1, 2), (0, 1))
L2 = ((1, 0), (2, 1))

# S-type matrices of the level-5 and level-7 Hilbert modular pullbacks.
P5_MATRIX = Mat4([[0, 0, 2, 1], [0, 0, 1, Fraction(3, 5)], [-3, 5, 0, 0], [5, -10, 0, 0]])
P8_MATRIX = Mat4([[0, 0, 2, 1], [0, 0, 1, Fraction(4, 7)], [-4, 7, 0, 0], [7, -14, 0, 0]])

# u with R_u V_5 fixing the level-5 surface pointwise; PRINTED_U is the variant that does not.
H5_U = ((2, 5), (1, 2))
PRINTED_U = ((2, -5), (-1, 2))


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, witness: str):
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"{self.name}: {self.checked} checks passed"
        return f"{self.name}: {len(self.failures)} of {self.checked} failed, first: {self.failures[0]}"


# --- SL2(Z) helpers ---

def mat2_int_mul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def random_word(rng: random.Random, letters, length: int):
    m = ((1, 0), (0, 1))
    for _ in range(length):
        m = mat2_int_mul(m, rng.choice(letters))
    return m


def random_pair(rng: random.Random, congruent: bool):
    """(M1, M2) in SL2(Z)^2; with ``congruent`` the pair agrees mod 2."""
    m1 = random_word(rng, (S, T), rng.randint(1, 6))
    if congruent:
        return m1, mat2_int_mul(m1, random_word(rng, (T2, L2), rng.randint(0, 3)))
    return m1, random_word(rng, (S, T), rng.randint(1, 6))


def random_upper(rng: random.Random) -> ComplexRational:
    return ComplexRational(Fraction(rng.randint(-6, 6), rng.randint(1, 4)), Fraction(rng.randint(1, 6), rng.randint(1, 4)))


# --- embeddings ---

def phi1(m1, m2, N: int) -> Mat4:
    (a1, b1), (c1, d1) = m1
    (a2, b2), (c2, d2) = m2
    return Mat4([
        [a1, 0, b1, 0],
        [0, a2, 0, Fraction(b2, N)],
        [c1, 0, d1, 0],
        [0, N * c2, 0, d2],
    ])


def phi4(m1, m2, N: int) -> Mat4:
    """Image of (M1, M2), M1 = M2 mod 2, in K(N) for odd N."""
    if N % 2 == 0:
        raise LevelError(f"the H4 embedding needs an odd level, got {N}")
    (a1, b1), (c1, d1) = m1
    (a2, b2), (c2, d2) = m2
    return Mat4([
        [a1, 0, 2 * b1, b1],
        [Fraction(a1 - a2, 2), a2, b1, Fraction(b2 + N * b1, 2 * N)],
        [Fraction(c1 + N * c2, 2), -N * c2, d1, Fraction(d1 - d2, 2)],
        [-N * c2, 2 * N * c2, 0, d2],
    ])


def diagonal_point(t, s, N: int) -> HalfSpacePoint:
    """Image of (t, s) on the diagonal surface: diag(t, s/N)."""
    return HalfSpacePoint(t, 0, s * Fraction(1, N))


def p4_point(t, s, N: int) -> HalfSpacePoint:
    """X(t, s) = [[2t, t], [t, t/2 + s/(2N)]]."""
    return HalfSpacePoint(t * 2, t, t * Fraction(1, 2) + s * Fraction(1, 2 * N))


def swap_matrix(N: int) -> Mat4:
    """U = R_u with u = [[2, N], [1, (N+1)/2]]; U V_N exchanges the two P4 parameters."""
    if N % 2 == 0:
        raise LevelError(f"U is defined for odd levels, got {N}")
    return conjugation(((2, N), (1, (N + 1) // 2)))


def p5_point(t1, t2) -> HalfSpacePoint:
    lam = QuadRational(Fraction(1, 2), Fraction(-1, 10), 5)
    lam_c = lam.conjugate()
    return HalfSpacePoint(t1 + t2, t1 * lam + t2 * lam_c, t1 * (lam * lam) + t2 * (lam_c * lam_c))


def p8_point(t1, t2) -> HalfSpacePoint:
    lam = QuadRational(1, Fraction(-1, 4), 2)
    lam_c = lam.conjugate()
    return HalfSpacePoint(
        t1 * lam + t2 * lam_c,
        (t1 + t2) * Fraction(1, 2),
        t1 * (lam_c * Fraction(2, 7)) + t2 * (lam * Fraction(2, 7)),
    )


def _neg_inv(t: ComplexRational) -> ComplexRational:
    return -(ComplexRational(1) / t)


def verify_embedding(which: str, N: int, samples: int | None = None, seed: int | None = None) -> Report:
    """Membership in K(N), the homomorphism law and intertwining with the parametrised points."""
    if which not in ("phi1", "phi4"):
        raise ValueError(f"unknown embedding {which!r}")
    samples = settings.embedding_samples if samples is None else samples
    rng = random.Random(settings.random_seed if seed is None else seed)
    embed = phi1 if which == "phi1" else phi4
    point = diagonal_point if which == "phi1" else p4_point
    congruent = which == "phi4"
    report = Report(f"{which} level {N}")

    for i in range(samples):
        m1, m2 = random_pair(rng, congruent)
        n1, n2 = random_pair(rng, congruent)
        image = embed(m1, m2, N)
        report.record(in_paramodular(image, N), f"sample {i}: image of {m1}, {m2} not in K({N})")
        report.record(
            image @ embed(n1, n2, N) == embed(mat2_int_mul(m1, n1), mat2_int_mul(m2, n2), N),
            f"sample {i}: not multiplicative on {m1}, {m2} and {n1}, {n2}",
        )
        if i < settings.point_samples:
            t, s = random_upper(rng), random_upper(rng)
            acted = moebius_act(image, point(t, s, N))
            expected = point(moebius_1(m1, t), moebius_1(m2, s), N)
            report.record(acted == expected, f"sample {i}: {which}({m1}, {m2}) moves {t}, {s} to {acted}")

    if which == "phi4":
        U = swap_matrix(N)
        report.record(in_paramodular(U, N), f"U is not in K({N})")
        for _ in range(settings.point_samples):
            t, s = random_upper(rng), random_upper(rng)
            swapped = moebius_act(U, fricke_point(p4_point(t, s, N), N))
            report.record(swapped == p4_point(s, t, N), f"U V_{N} sends X({t}, {s}) to {swapped}")

    logger.info(report.summary())
    return report


def verify_H5_fixing(samples: int | None = None, seed: int | None = None,
                     u=H5_U) -> tuple[Report, Report]:
    """R_u V_5 fixes every level-5 surface point; R_u alone must move them."""
    samples = settings.point_samples if samples is None else samples
    rng = random.Random(settings.random_seed if seed is None else seed)
    points = [(ComplexRational(0, 1), ComplexRational(0, 2)), (ComplexRational(1, 1), ComplexRational(0, 1))]
    points += [(random_upper(rng), random_upper(rng)) for _ in range(samples)]
    R = conjugation(u)
    fixing = Report("R_u V_5 fixes H5")
    control = Report("R_u alone moves H5")
    fixing.record(in_paramodular(R, 5), f"R_u with u = {u} is not in K(5)")
    for t1, t2 in points:
        Z = p5_point(t1, t2)
        image = moebius_act(R, fricke_point(Z, 5))
        fixing.record(image == Z, f"({t1}, {t2}) sent to {image}")
        control.record(moebius_act(R, Z) != Z, f"R_u alone fixes ({t1}, {t2})")
    logger.info(fixing.summary())
    return fixing, control


def verify_hilbert_inversion(level: int, samples: int | None = None, seed: int | None = None) -> Report:
    """The S-type matrix maps the surface point at (t1, t2) to the one at (-1/t1, -1/t2)."""
    if level not in (5, 7):
        raise LevelError(f"Hilbert inversion matrices exist for levels 5 and 7, got {level}")
    samples = settings.point_samples if samples is None else samples
    rng = random.Random(settings.random_seed if seed is None else seed)
    M, point = (P5_MATRIX, p5_point) if level == 5 else (P8_MATRIX, p8_point)
    report = Report(f"inversion on the level-{level} surface")
    report.record(in_paramodular(M, level), f"inversion matrix not in K({level})")
    for _ in range(samples):
        t1, t2 = random_upper(rng), random_upper(rng)
        image = moebius_act(M, point(t1, t2))
        report.record(image == point(_neg_inv(t1), _neg_inv(t2)), f"({t1}, {t2}) sent to {image}")
    return report


def catalogue(N_values=(5, 7), samples: int | None = None, seed: int | None = None) -> Report:
    """Every fixed matrix used by the pullbacks lies in its paramodular group; the action law holds."""
    samples = settings.embedding_samples if samples is None else samples
    rng = random.Random(settings.random_seed if seed is None else seed)
    report = Report("matrix catalogue")
    report.record(in_paramodular(P5_MATRIX, 5), "P5 matrix not in K(5)")
    report.record(in_paramodular(P8_MATRIX, 7), "P8 matrix not in K(7)")
    report.record(in_paramodular(conjugation(H5_U), 5), "R_u not in K(5)")
    for N in N_values:
        report.record(in_paramodular(Mat4.identity(), N), f"identity not in K({N})")
        report.record(in_paramodular(swap_matrix(N), N), f"U not in K({N})")
        report.record(in_paramodular(translation(1, 1, Fraction(1, N)), N), f"T_b not in K({N})")
        report.record(not in_paramodular(translation(0, 0, Fraction(1, 2 * N)), N),
                      f"T_b with b3 = 1/(2N) accepted in K({N})")
    for i in range(samples):
        N = N_values[i % len(N_values)]
        m = phi4(*random_pair(rng, True), N) @ phi1(*random_pair(rng, False), N)
        m2 = phi1(*random_pair(rng, False), N) @ translation(rng.randint(-3, 3), rng.randint(-3, 3), Fraction(rng.randint(-3, 3), N))
        report.record(in_paramodular(m, N), f"sample {i}: product not in K({N})")
        if i < settings.point_samples:
            Z = p4_point(random_upper(rng), random_upper(rng), N)
            report.record(
                moebius_act(m @ m2, Z) == moebius_act(m, moebius_act(m2, Z)),
                f"sample {i}: action law fails at {Z}",
            )
    return report
