"""Generator sets used by the CLI and the verification suites."""

from fractions import Fraction

from paramodring.config import settings
from paramodring.forms import deghilb
from paramodring.forms.classical import gamma2_e1, gamma2_e2
from paramodring.gralg.graded import GeneratorSet

PRESETS = ("MG", "MGsym", "Asym", "Astar", "gamma2")


def protocol_windows(kmax: int) -> tuple[Fraction, Fraction]:
    """Two nested windows past k/4 for every weight k <= kmax."""
    large = Fraction(kmax, 4) + 1 + settings.rank_window_margin
    return large - Fraction(1, 2), large


def build_preset(name: str, kmax: int) -> GeneratorSet:
    windows = protocol_windows(kmax)
    T = windows[1]
    if name == "gamma2":
        return GeneratorSet(
            [("e1", 2, gamma2_e1(T).expansion), ("e2", 2, gamma2_e2(T).expansion)], windows
        )
    if name in ("MG", "MGsym"):
        members = [
            ("X2", 2, deghilb.X2(T).expansion),
            ("X4", 4, deghilb.X4(T).expansion),
            ("Delta6", 6, deghilb.Delta6(T).expansion),
        ]
        if name == "MG":
            members.append(("X8", 8, deghilb.X8(T).expansion))
        return GeneratorSet(members, windows)
    if name in ("Asym", "Astar"):
        gens = deghilb.a_star_generators(T)
        if name == "Asym":
            gens = gens[:5]
        return GeneratorSet([(g.label, g.weight, g.expansion) for g in gens], windows)
    raise ValueError(f"unknown generator preset {name!r}; choose from {', '.join(PRESETS)}")
