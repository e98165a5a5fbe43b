from .scalars import Cyc
from .characters import UnitCharacter, MultChar, gauss_sum, additive_char
from .reps import LocalRep, WhittakerData, torus_whittaker, kirillov_coeff
from .integrals import (whittaker_pairing, rankin_selberg_psi,
                        trilinear_numeric, InducedSection,
                        IntertwinedSection, ordinary_section, section_pairing)

__all__ = [
    "Cyc", "UnitCharacter", "MultChar", "gauss_sum", "additive_char",
    "LocalRep", "WhittakerData", "torus_whittaker", "kirillov_coeff",
    "whittaker_pairing", "rankin_selberg_psi", "trilinear_numeric",
    "InducedSection", "IntertwinedSection", "ordinary_section",
    "section_pairing",
]
