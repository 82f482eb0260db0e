"""Exact Levine-Tristram signatures and slice obstructions for satellite knots in S^1 x S^2."""

__version__ = "0.1.0"

from .branched_cover import Inapplicable, MoebiusVerdict, linking_form, moebius_obstruction
from .cyclotomic import CyclotomicField, Cyc, RootOfUnity
from .knots import SeifertMatrix, catalog, connected_sum, mirror, resolve_knot, reverse
from .linalg import IntMatrix, certified_signature, smith_normal_form
from .obstruction import NonSliceCertificate, certify_nonslice, search_seed_knot
from .signatures import lt_signature
from .surgery import boundary_presentation, h1_of_presentation

__all__ = [
    "__version__",
    "Cyc",
    "CyclotomicField",
    "Inapplicable",
    "IntMatrix",
    "MoebiusVerdict",
    "NonSliceCertificate",
    "RootOfUnity",
    "SeifertMatrix",
    "boundary_presentation",
    "catalog",
    "certified_signature",
    "certify_nonslice",
    "connected_sum",
    "h1_of_presentation",
    "linking_form",
    "lt_signature",
    "mirror",
    "moebius_obstruction",
    "resolve_knot",
    "reverse",
    "search_seed_knot",
    "smith_normal_form",
]
