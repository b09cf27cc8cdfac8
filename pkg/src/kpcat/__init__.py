"""Schubert polynomials, Kraskiewicz-Pragacz modules and the Ringel
self-duality of their highest weight category, in exact arithmetic."""

from .perm import Permutation, code, perm_from_code, w0, conjugate_w0, lambda_n, bar
from .schubert import Poly, schubert_poly, schubert_expand, reduce_Hn, iota_Hn
from .weightmod import WeightModule, Morphism, hom_space, tensor, character, validate
from .kp import kp_module, kp_module_gen, tilting_module, full_tilting, check_lemma_pqpq
from .homological import (ext_dims, standard_filtration, is_tilting, tilting_envelope,
                          tilting_resolution)
from .ringel import (end_algebra, ringel_F, projective_cover, ext_oracle_via_E,
                     restricted_tensor, conjecture_dims)

__all__ = [
    "Permutation", "code", "perm_from_code", "w0", "conjugate_w0", "lambda_n", "bar",
    "Poly", "schubert_poly", "schubert_expand", "reduce_Hn", "iota_Hn",
    "WeightModule", "Morphism", "hom_space", "tensor", "character", "validate",
    "kp_module", "kp_module_gen", "tilting_module", "full_tilting", "check_lemma_pqpq",
    "ext_dims", "standard_filtration", "is_tilting", "tilting_envelope",
    "tilting_resolution", "end_algebra", "ringel_F", "projective_cover",
    "ext_oracle_via_E", "restricted_tensor", "conjecture_dims",
]

__version__ = "0.1.0"
