from .padic import PadicNumber, teichmuller, plog, psqrt, sqrt_onepz
from .cyclo import CycloPadic
from .iwasawa import IwasawaElement, ArithmeticPoint, group_like, specialize, tail_valuation
from .characters import DirichletCharacter

__all__ = [
    "PadicNumber", "teichmuller", "plog", "psqrt", "sqrt_onepz",
    "CycloPadic",
    "IwasawaElement", "ArithmeticPoint", "group_like", "specialize", "tail_valuation",
    "DirichletCharacter",
]
