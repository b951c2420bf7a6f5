"""Bilinear identities on Schur functions, generated by Young-diagram
surgery and checked with exact arithmetic."""

from .identities import (
    Identity,
    Term,
    barred_identity,
    conjugate_identity,
    fulmek_kleber_identity,
    gps_identity,
    main_identity,
    square_identity,
    square_identity_via_nu,
)
from .oracle import verify_identity
from .partition import Partition, conjugate, make_partition
from .plucker import derive_main_identity, plucker_expand
from .strips import StripSpec, add_strips, enumerate_specs

__version__ = "0.1.0"
