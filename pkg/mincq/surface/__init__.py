from .domain import Domain, BoxDomain
from .closed_form import (
    SurfaceSpec,
    ClosedFormSurface,
    integrate_surface,
    partials,
    associate,
    surface_from_pair,
)
from .numeric import NumericSurface
from .geometry import (
    GeometryReport,
    geometry_report,
    check_second_derivatives,
    geometry_grid,
    normal_field,
    lambda_singularities,
    fundamental_quantities,
)
from .mesh import Mesh, mesh, export_obj, export_csv
