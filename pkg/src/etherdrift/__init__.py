"""Light in moving media, first-order drift interferometry, AB-type phases,
Proca cylinder potentials and photon-mass bounds, and interaction field
momentum quadrature."""

__version__ = "0.1.0"

from .errors import (ConvergenceError, DegenerateConfigError, DimensionError,
                     DomainError, EtherdriftError, InputError,
                     SeriesOverflowError, SingularPathError)
from .units import (GAUSSIAN_CONTEXT, MODERN, PAPER, SI_CONTEXT, Dimension,
                    PhysicalConstants, Quantity, UnitContext, UnitSystem,
                    convert, get_constants, inverse_length_to_mass,
                    mass_to_inverse_length)
from .kinematics import (CompositionLaw, DragEstimate, FlowState, MediumSpec,
                         compose_lab_speed, drag_effectiveness_estimate,
                         effective_fresnel_speed, einstein_composed_speed,
                         fresnel_drag_coefficient, fresnel_speed,
                         tangherlini_composed_speed)
from .interferometer import (InterferometerConfig, RotationSignal, ScanRow,
                             angle_scan, arm_speed, delay_exact,
                             delay_first_order, fringe_shift,
                             improvement_factor, min_detectable_u,
                             rotation_signal)
from .abphase import (FresnelFlow, Path, SolenoidVectorPotential, UniformQ,
                      field_from_dict, fresnel_momentum, interference_intensity,
                      magnetic_ab_phase, phase_line_integral, scalar_phase)
from .proca import (PhotonMassBound, ProcaCylinderConfig, bessel_I0, bessel_K0,
                    bounds_registry, cylinder_potential_exact,
                    cylinder_potential_expansion, invert_bound,
                    mass_phase_correction, projected_bound,
                    relative_scalar_phase, time_of_flight, yukawa_potential)
from .fieldmomentum import (ConvergenceRow, MomentumResult,
                            SolenoidChargeGeometry, analytic_solenoid_momentum,
                            convergence_study, em_momentum_density,
                            integrate_field_momentum)
