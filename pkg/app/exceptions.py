"""
Felklasser för Torelli-laboratoriet

Alla fel ärver från ValueError så att anropare kan fånga dem som ogiltig indata.
"""


class InputError(ValueError):
    """Ogiltig indata: felaktig notation, index utanför intervall, fel matrisform"""


class NonUnimodularError(ValueError):
    """Delgittret har en Gram-matris som inte kan reduceras till ±1-par"""

    def __init__(self, message: str = "non-unimodular sublattice"):
        super().__init__(message)


class NoRewriteRuleError(ValueError):
    """Ingen omskrivningsregel gäller för paret (vridning, kedja)"""
