from .model_abc import JsonModel, StrEnumModel
from .enums import FamilyTag, ComponentKind, EckardtMode, ModuliDirection, PathStatus
from .sylvester import SylvesterPoint
from .moduli import ModuliPoint, weighted_equal, Q_POINT
from .cubic import CubicForm3
from .vertex import PentVertex, all_vertices
from .permgroup import PermSubgroup, Permutation
from .component import LinearComponent
from .reports import MultiplicityReport
