"""Verification and reduction toolkit for flag simplicial complexes.

Decides local curvature conditions (k-largeness, m-location, local weak
systolicity), performs area-reducing disc diagram surgeries, metrizes
7-located discs with the flattened wheel metric, and cross-checks
everything against brute-force oracles.
"""

from .complexes import (
    ComplexError,
    DwheelWitness,
    FlagComplex,
    WheelWitness,
    canonical_cycle,
    complex_from_dict,
    complex_to_dict,
    enumerate_cycles,
    enumerate_dwheels,
    enumerate_full_wheels,
    enumerate_induced_cycles,
    is_full,
    link_graph,
    load_complex,
    save_complex,
    wheel_witness,
)
from .conditions import (
    ExtendedFiveWheelWitness,
    LocationReport,
    check_w5hat,
    enumerate_extended_five_wheels,
    is_k_large,
    is_locally_k_large,
    is_locally_weakly_systolic,
    is_m_located,
    validate_report,
)
from .discs import (
    DiscError,
    SimplicialDisc,
    check_degree_sums,
    check_disc_7_located,
    disc_from_dict,
    disc_to_dict,
    load_disc,
    save_disc,
    subdisc_bounded_by,
)
from .generators import (
    GeneratorSpec,
    cone,
    dwheel_complex,
    extended_five_wheel_complex,
    generate,
    hex_disc,
    octahedron,
    random_7_located_disc,
    random_flag_complex,
    wheel_complex,
)
from .metric import (
    MetricError,
    MetrizationError,
    MetrizedDisc,
    TriangleShape,
    angle_sum,
    export_svg,
    is_cat0,
    isoperimetric_bound,
    metric_area,
    metric_report,
    metrize,
    triangle_shape_for,
    units_to_pi,
)
from .oracle import OracleResult, brute_force_min_diagram
from .surgery import (
    FOUR_CYCLE,
    FOUR_WHEEL,
    FIVE_CYCLE,
    SIX_CYCLE,
    DiagramError,
    DiscDiagram,
    MissingDiagonalError,
    NotApplicableError,
    PreconditionError,
    SurgeryCertificate,
    SurgeryError,
    area,
    diagram_from_dict,
    diagram_to_dict,
    load_diagram,
    reduce,
    replace_4wheel,
    save_diagram,
    surgery_4cycle,
    surgery_5cycle,
    surgery_6cycle,
)

__version__ = "0.1.0"
