"""Exact end super domination on small simple graphs."""

from .closed_forms import construct_optimal_set, gamma_esp_formula, n_esp_formula
from .edgelist import format_edge_list, parse_edge_list, read_edge_list
from .estimator import EndSuperDomination
from .exceptions import CapExceededError, EsdomError, InvalidGraphError, NotEsdSetError
from .generators import FamilyQuery, generate
from .graph import Graph, VertexSet
from .solver import Mode, enumerate_minimum_esd, gamma_esp, solve
from .verify import Role, check_esd, classify_roles, esd_violation

__all__ = [
    "CapExceededError",
    "EndSuperDomination",
    "EsdomError",
    "FamilyQuery",
    "Graph",
    "InvalidGraphError",
    "Mode",
    "NotEsdSetError",
    "Role",
    "VertexSet",
    "check_esd",
    "classify_roles",
    "construct_optimal_set",
    "enumerate_minimum_esd",
    "esd_violation",
    "format_edge_list",
    "gamma_esp",
    "gamma_esp_formula",
    "generate",
    "n_esp_formula",
    "parse_edge_list",
    "read_edge_list",
    "solve",
]
