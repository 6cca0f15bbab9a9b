"""Syndrome-extension decoding of low-rate Reed-Solomon codes.

A received word is virtually extended into a heterogeneous interleaved
RS word by taking componentwise powers; the resulting syndromes are fed
to a varying-length multi-sequence shift-register synthesizer, which
locates up to ``t_max`` errors (beyond half the minimum distance).
"""

from .gf_field import FieldSpec, FieldError
from .rs_codec import RsCode, SyndromeSet
from .shiftreg import ConnectionPoly, SequenceBundle, synthesize, satisfies_recursions
from .decoder import (
    DecodeResult,
    DecoderParams,
    bmd_decode,
    decode,
    decoder_params,
    l_closed_form,
    select_l,
    t_max_l,
    threshold_rate,
)
from .bounds import BigProb, BoundUnavailable, p_e_bound, p_f_bound, p_w_qsc, p_w_t
from .sim import QscConfig, TrialReport, mc_fixed_weight, mc_qsc

__all__ = [
    "FieldSpec",
    "FieldError",
    "RsCode",
    "SyndromeSet",
    "ConnectionPoly",
    "SequenceBundle",
    "synthesize",
    "satisfies_recursions",
    "DecodeResult",
    "DecoderParams",
    "decode",
    "bmd_decode",
    "decoder_params",
    "select_l",
    "t_max_l",
    "threshold_rate",
    "l_closed_form",
    "BigProb",
    "BoundUnavailable",
    "p_e_bound",
    "p_f_bound",
    "p_w_t",
    "p_w_qsc",
    "QscConfig",
    "TrialReport",
    "mc_fixed_weight",
    "mc_qsc",
]
