"""
Tjänster för Torelli-laboratoriet
"""
from app.services.surface import build_surface, enumerate_subsurfaces
from app.services.chains import enumerate_generators, expand_subchain, relation_words
from app.services.johnson_tau import tau_chainmap, tau_word
from app.services.bcj_sigma import sigma_chainmap, sigma_word
from app.services.verification import VerificationService

__all__ = [
    "build_surface",
    "enumerate_subsurfaces",
    "enumerate_generators",
    "expand_subchain",
    "relation_words",
    "tau_chainmap",
    "tau_word",
    "sigma_chainmap",
    "sigma_word",
    "VerificationService",
]
