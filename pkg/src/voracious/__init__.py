"""Exact-arithmetic engine for Coxeter groups: greedy wall-set projections,
the geodesic language they generate, and a finite automaton recognising it.
"""

from .automaton import (
    VoraciousAutomaton,
    build_automaton,
    from_json_dict,
    pivots,
    small_roots,
    small_roots_bruteforce,
)
from .coxeter import (
    INF,
    CoxeterMatrix,
    CoxeterSystem,
    GroupConfigError,
    GroupElement,
    ResourceLimitError,
    load_group_file,
    parse_group_config,
    word_from_string,
    word_to_string,
)
from .field import FieldContext, FieldScalar
from .language import FactorizationChain, VoraciousLanguage
from .verify import Verifier, VerifierConfig, VerificationReport, run_suite
from .walls import Wall, WallGeometry

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CoxeterMatrix",
    "CoxeterSystem",
    "FactorizationChain",
    "FieldContext",
    "FieldScalar",
    "GroupConfigError",
    "GroupElement",
    "ResourceLimitError",
    "VerificationReport",
    "Verifier",
    "VerifierConfig",
    "VoraciousAutomaton",
    "VoraciousLanguage",
    "Wall",
    "WallGeometry",
    "build_automaton",
    "from_json_dict",
    "load_group_file",
    "parse_group_config",
    "pivots",
    "run_suite",
    "small_roots",
    "small_roots_bruteforce",
    "word_from_string",
    "word_to_string",
    "__version__",
]
