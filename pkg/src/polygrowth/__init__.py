"""Certified evaluation and verification of max-modulus growth bounds for polynomials."""

from .bounds import (BoundId, GGMParams, ankeny_rivlin, bernstein, dewan_ahuja, ggm, ggm_s0,
                     kumar_lal_factor, nwaeze)
from .errors import DomainError, HypothesisError, ResourceError
from .extrema import CircleEstimate, lipschitz_bound, max_modulus, min_modulus
from .generators import (ClassId, GeneratorConfig, extremal_ar, extremal_bernstein,
                         lacunary_on_circle, no_zeros_in_disk, zeros_on_circle)
from .poly import LacunaryProfile, Polynomial, derivative, evaluate, from_roots, lacunary_profile
from .verify import (CampaignConfig, CampaignReport, ToleranceSpec, VerificationRecord,
                     check_derivative_bound, check_instance, proof_chain_check, run_campaign)

__version__ = "0.1.0"
