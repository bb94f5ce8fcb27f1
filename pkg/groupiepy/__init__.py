# -*- coding: utf-8 -*-

__version__ = '0.1.0'

from .graph import Graph, ModelParams, gen_bipartite, gen_gnp, generate  # noqa
from .groupie import count_groupies, groupie_report, is_groupie  # noqa
from .parser import load, load_edge_list, load_fp  # noqa

__all__ = ["Graph", "ModelParams", "gen_gnp", "gen_bipartite", "generate",
           "is_groupie", "groupie_report", "count_groupies", "load",
           "load_edge_list", "load_fp"]
