from bocs_engine.reduce.arquiver import AREdge, ARNode, ARQuiver, ar_quiver
from bocs_engine.reduce.engine import (
    LimitExceeded,
    LogRow,
    LoopEncountered,
    ReductionLog,
    ReductionMove,
    ReductionRun,
    Stopped,
    Terminal,
    Verdict,
    VertexProvenance,
    apply_move,
    classify,
    plan_script,
    predicted_counts,
    run,
    step_strategy,
)
from bocs_engine.reduce.moves import (
    EdgeReduction,
    Eliminable,
    Superfluous,
    eliminate_relation_arrow,
    find_superfluous,
    free_loop,
    minimal_edge_reduce,
    regularise,
)

__all__ = [
    "AREdge",
    "ARNode",
    "ARQuiver",
    "EdgeReduction",
    "Eliminable",
    "LimitExceeded",
    "LogRow",
    "LoopEncountered",
    "ReductionLog",
    "ReductionMove",
    "ReductionRun",
    "Stopped",
    "Superfluous",
    "Terminal",
    "Verdict",
    "VertexProvenance",
    "apply_move",
    "ar_quiver",
    "classify",
    "eliminate_relation_arrow",
    "find_superfluous",
    "free_loop",
    "minimal_edge_reduce",
    "plan_script",
    "predicted_counts",
    "regularise",
    "run",
    "step_strategy",
]
