from .exactnum import CycloRational, Rational
from .quaternion import Quaternion, jlq_term, jq_term
from .sequences import SeqKind, seq_term

__version__ = "0.1.0"

__all__ = [
    "CycloRational",
    "Quaternion",
    "Rational",
    "SeqKind",
    "jlq_term",
    "jq_term",
    "seq_term",
]
