"""Finite lattice-based logics and their meet-over-successors modal
extensions: evaluation, counterexample search, and desk-scale verification
of the box-axiom characterizations."""

from .constructions import belnap_four, boolean_algebra, chain, antichain_k5, twist
from .enumeration import (
    enumerate_complementations,
    enumerate_lattices,
    enumerate_upsets,
)
from .errors import (
    BoundTooLarge,
    FileFormatError,
    FormulaSyntaxError,
    InvalidInput,
    LatModalError,
    MissingOperation,
    ModalFormulaRejected,
    NotALattice,
    NotAPoset,
    NotBoolean,
    UnboundVariable,
    WitnessNotApplicable,
)
from .formula import (
    And,
    Box,
    Formula,
    Imp,
    Not,
    Or,
    Var,
    is_modal_free,
    modal_depth,
    parse,
    render,
    substitute,
    variables,
)
from .harness import HarnessConfig, TheoremReport, k5_regression, run_suite, verify_theorem
from .kripke import (
    BoxMode,
    CounterexampleReport,
    Frame,
    KripkeModel,
    evaluate,
    frame_valid,
    model_satisfies,
    world_satisfies,
)
from .lattice import (
    DEDUCTIVE_EQ1,
    MATERIAL,
    EntailmentResult,
    ImplicationTable,
    Lattice,
    Matrix,
    apply_op,
    big_meet,
    build_implication,
    check_designated,
    check_lattice_properties,
    classify_implication,
    entails,
    from_leq,
    matrix_from_names,
    propositional_value,
    subset_join,
    validate_lattice,
)
from .search import (
    AXIOM_K,
    BOX_DISJUNCTION_DIST,
    RegularityResult,
    RegularityWitness,
    check_regularity,
    construct_witness,
    enumerate_frames,
    find_frame_counterexample,
)

__version__ = "0.1.0"
