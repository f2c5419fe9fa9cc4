"""Linked nested datatypes over a universe of type-transformer codes.

Lists, nests, maybes, bushes and friends are all one spine type applied to
different transformers; every operation here (map, folds, any/all with
evidence paths, equality, show) is derived from per-transformer seed
bundles by a single lifting step. See ``lndt.spread`` for the derivation,
``lndt.codes`` for the universe, and the ``lndtool`` CLI for the command
line surface.
"""

from .bushn import (
    BaseBN,
    BushNVal,
    ConsBN,
    NilBN,
    bushn_atoms,
    bushn_level,
    from_bushn,
    to_bushn,
    wf_bushn,
)
from .codes import (
    App,
    AtomSort,
    BaseT,
    BushC,
    Code,
    Lndt,
    Null,
    Tup,
    TypeExpr,
    alias_names,
    app_iter,
    parse_code,
    print_code,
    resolve_alias,
)
from .errors import (
    AliasError,
    IllFormedError,
    LevelError,
    LndtError,
    NullSeedError,
    ParseError,
    PathError,
    SeedError,
    SortMismatchError,
    UninhabitedError,
)
from .instances import INSTANCES, InstanceEntry, list_of, maybe_of, nest_full, nperfect_full
from .laws import GenConfig, LawReport, LawResult, SplitMix64, enum_vals, gen_val, run_laws
# The derivation step itself lives one level down (``lndt.spread.spread``)
# so the submodule name stays importable as a namespace.
from .spread import (
    AllHolds,
    AllResult,
    Counterexample,
    Spreadable,
    all,
    any,
    eq,
    flatten,
    foldl,
    foldr,
    is_empty,
    map,
    member,
    null_seed_invocations,
    show,
    size,
    spreadable_of,
)
from .values import (
    Atom,
    Path,
    PathStep,
    SeqNode,
    SeqStep,
    TupNode,
    TupStep,
    Val,
    WfFail,
    WfOk,
    WfReason,
    WfReport,
    atom,
    atom_at,
    atom_text,
    infer_sort,
    parse_val,
    print_val,
    struct_size,
    wf,
)

__all__ = [
    "AliasError",
    "AllHolds",
    "AllResult",
    "App",
    "Atom",
    "AtomSort",
    "BaseBN",
    "BaseT",
    "BushC",
    "BushNVal",
    "Code",
    "ConsBN",
    "Counterexample",
    "GenConfig",
    "INSTANCES",
    "IllFormedError",
    "InstanceEntry",
    "LawReport",
    "LawResult",
    "LevelError",
    "Lndt",
    "LndtError",
    "NilBN",
    "Null",
    "NullSeedError",
    "ParseError",
    "Path",
    "PathError",
    "PathStep",
    "SeedError",
    "SeqNode",
    "SeqStep",
    "SortMismatchError",
    "SplitMix64",
    "Spreadable",
    "Tup",
    "TupNode",
    "TupStep",
    "TypeExpr",
    "UninhabitedError",
    "Val",
    "WfFail",
    "WfOk",
    "WfReason",
    "WfReport",
    "alias_names",
    "all",
    "any",
    "app_iter",
    "atom",
    "atom_at",
    "atom_text",
    "bushn_atoms",
    "bushn_level",
    "enum_vals",
    "eq",
    "flatten",
    "foldl",
    "foldr",
    "from_bushn",
    "gen_val",
    "infer_sort",
    "is_empty",
    "list_of",
    "map",
    "maybe_of",
    "member",
    "nest_full",
    "nperfect_full",
    "null_seed_invocations",
    "parse_code",
    "parse_val",
    "print_code",
    "print_val",
    "resolve_alias",
    "run_laws",
    "show",
    "size",
    "spreadable_of",
    "struct_size",
    "to_bushn",
    "wf",
    "wf_bushn",
]
