"""Exact classification and certification of Ad-real elements of sl(n, C) and sl(n, H)."""

from .errors import NoWitness
from .matrices import Matrix, det_H, phi_embed, tr_H
from .partitions import Partition, census, classify_partition, enumerate_partitions
from .reality import Reason, classify, classify_matrix
from .scalars import GaussianRational, RationalQuaternion, parse_scalar
from .spectral import jordan_form, jordan_form_C, jordan_form_H
from .witness import build_witness, verify

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "Matrix",
    "NoWitness",
    "Partition",
    "RationalQuaternion",
    "Reason",
    "build_witness",
    "census",
    "classify",
    "classify_matrix",
    "classify_partition",
    "det_H",
    "enumerate_partitions",
    "jordan_form",
    "jordan_form_C",
    "jordan_form_H",
    "parse_scalar",
    "phi_embed",
    "tr_H",
    "verify",
]
