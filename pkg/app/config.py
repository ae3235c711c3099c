"""
Konfiguration för Torelli-laboratoriet
"""
from enum import Enum


# Största tillåtna dimension för ⋀³ i CLI:t (C(24, 3) = 2024)
DEFAULT_MAX_DIM = 2024

# Gradtak för Boolska polynom (B³)
SIGMA_DEGREE = 3

# Relationerna J1-J3 kräver k >= 3
MIN_RELATION_GENUS = 3

# Antal kedjegeneratorer per genus-3-delyta enligt den publicerade räkningen
CLAIMED_GENERATOR_COUNT = 85

# Undre gräns för generatorantalet (rangen av abelianiseringen vid g = 3)
MIN_GENERATOR_COUNT = 64

# Slumpkontroller
RANDOM_SEED = 20240607
RANDOM_SAMPLES = 1000
RANDOM_COORD_BOUND = 5

# Grafkontroller körs upp till detta genus
GRAPH_MAX_GENUS = 9

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Verdict(str, Enum):
    """Utfall för en kontroll"""
    PASS = "pass"
    FAIL = "fail"
    REPORT_ONLY = "report-only"


class RelationName(str, Enum):
    """Kedjerelationer som kan verifieras"""
    J1 = "J1"
    J2 = "J2"
    J3 = "J3"
    LANTERN = "lantern"


class SubsurfaceKind(str, Enum):
    """Familjer av delytor"""
    R = "R_i"  # genus 1, en rand
    S = "S_I"  # genus |I|, två ränder
    W = "W_I"  # handtag I, ev. inklusive randhandtaget g+1
    Y = "Y_i"  # komplement till en icke-separerande kurva
    X = "X_I"  # genus |I|, 2 + g - |I| ränder


class SpanTarget(str, Enum):
    """Vad span-kommandot räknar ut"""
    TAU = "tau"
    SIGMA = "sigma"
    DMIN = "dmin"
