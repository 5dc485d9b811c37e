from enum import Enum


class RankMode(str, Enum):
    EXACT = "exact"
    MODULAR = "modular"
    GENERIC = "generic"


class Certainty(str, Enum):
    EXACT = "exact"
    PROBABILISTIC = "probabilistic"


class RankPolicyKind(str, Enum):
    EXACT = "exact"
    FAST = "fast"
    MODULAR = "mod"
    GENERIC = "generic"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
