"""Bunch-based embedding of Lorenz and modular links, parent-link diagrams and
combinatorial volume bounds."""

from .bounds import V_TET, BoundReport, bound_report, count_based_bound, linear_bound, quadratic_bound
from .bunch import (
    FullBunchOrders,
    Order,
    Slot,
    TemplateEmbedding,
    bunch_size_ranges,
    bunch_sizes,
    compare_bases,
    embed,
    full_bunch_orders,
)
from .classify import BaseOrder, base_orders, class_key, partition, same_class
from .errors import LinkError
from .parent import (
    CrossingReport,
    DehnRecipe,
    ParentDiagram,
    Region,
    build_parent_diagram,
    count_crossings,
    dehn_recipe,
    isomorphic,
    total_iota,
)
from .render import RenderOptions, render_parent_svg, render_template_svg
from .sweep import sweep_counts, sweep_intersections
from .williams import BranchOrder, Mode, branch_order, lorenz_permutation, verify_against_bunch
from .word import BaseLabel, LorenzWord, ModularLink, parse_link, parse_word, trip_number

__version__ = "0.1.0"

__all__ = [
    "V_TET", "BaseLabel", "BaseOrder", "BoundReport", "BranchOrder", "CrossingReport",
    "DehnRecipe", "FullBunchOrders", "LinkError", "LorenzWord", "Mode", "ModularLink",
    "Order", "ParentDiagram", "Region", "RenderOptions", "Slot", "TemplateEmbedding",
    "base_orders", "bound_report", "branch_order", "build_parent_diagram", "bunch_size_ranges",
    "bunch_sizes", "class_key", "compare_bases", "count_based_bound", "count_crossings",
    "dehn_recipe", "embed", "full_bunch_orders", "isomorphic", "linear_bound",
    "lorenz_permutation", "parse_link", "parse_word", "partition", "quadratic_bound",
    "render_parent_svg", "render_template_svg", "same_class", "sweep_counts",
    "sweep_intersections", "total_iota", "trip_number", "verify_against_bunch",
]
