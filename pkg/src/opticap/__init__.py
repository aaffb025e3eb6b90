"""Capacity limits and photon-efficient modulation for slotted optical links."""

__version__ = "0.1.0"

from .channel import (
    ChannelParams,
    Constellation,
    LinkBudget,
    mean_photon_number,
    photons_per_slot_from_budget,
    propagate_sample,
    received_mean_photons,
    sinc_orthogonality,
)
from .detection import (
    Direct,
    DualHomodyne,
    Homodyne,
    direct_detection_pmf,
    dual_homodyne_pdf,
    homodyne_pdf,
    sample_detection,
)
from .fock import (
    DensityMatrix,
    FockVector,
    chi_bpsk_closed_form,
    chi_gaussian_discretized,
    choose_cutoff,
    coherent_state,
    holevo_chi,
    von_neumann_entropy,
)
from .hadamard import (
    ExtendedSchemeParams,
    HadamardWord,
    cascade_transform,
    extended_scheme_mi,
    hadamard_ppm_mi,
    hadamard_word,
    optimize_p1,
)
from .infotheory import (
    DiscreteLaw,
    GaussianMixtureLaw,
    HybridLaw,
    MiProblem,
    capacity_fock,
    capacity_holevo,
    capacity_shannon_1q,
    capacity_shannon_2q,
    holevo_advantage,
    mutual_information,
    pie,
    pie_holevo_noisy_limit,
    pie_shannon_limits,
    rate,
    thermal_entropy,
)
from .ppm import (
    PpmParams,
    lambert_w,
    optimal_ppm_order_approx,
    optimal_ppm_order_exact,
    ppm_click_prob,
    ppm_mutual_information,
    ppm_pie,
    ppm_pie_opt_approx,
)

__all__ = [
    "__version__",
    "ChannelParams",
    "Constellation",
    "LinkBudget",
    "mean_photon_number",
    "photons_per_slot_from_budget",
    "propagate_sample",
    "received_mean_photons",
    "sinc_orthogonality",
    "Direct",
    "DualHomodyne",
    "Homodyne",
    "direct_detection_pmf",
    "dual_homodyne_pdf",
    "homodyne_pdf",
    "sample_detection",
    "DensityMatrix",
    "FockVector",
    "chi_bpsk_closed_form",
    "chi_gaussian_discretized",
    "choose_cutoff",
    "coherent_state",
    "holevo_chi",
    "von_neumann_entropy",
    "ExtendedSchemeParams",
    "HadamardWord",
    "cascade_transform",
    "extended_scheme_mi",
    "hadamard_ppm_mi",
    "hadamard_word",
    "optimize_p1",
    "DiscreteLaw",
    "GaussianMixtureLaw",
    "HybridLaw",
    "MiProblem",
    "capacity_fock",
    "capacity_holevo",
    "capacity_shannon_1q",
    "capacity_shannon_2q",
    "holevo_advantage",
    "mutual_information",
    "pie",
    "pie_holevo_noisy_limit",
    "pie_shannon_limits",
    "rate",
    "thermal_entropy",
    "PpmParams",
    "lambert_w",
    "optimal_ppm_order_approx",
    "optimal_ppm_order_exact",
    "ppm_click_prob",
    "ppm_mutual_information",
    "ppm_pie",
    "ppm_pie_opt_approx",
]
