from .formula import Formula, Var, Bot, Top, And, Or, Imp, Coimp, BOT, TOP
from .parser import parse
from .poset import FinitePoset, from_edges, chain, antichain
from .configs import SearchConfigs, DEFAULT_CONFIGS
from .cotree import StructureClass, classify, make_comb, make_hcomb, canonical_code, enumerate_cotrees
from .conversion import frame_from_dict, frame_to_dict, load_frame, to_dot, to_hasse_graph
from .batch import disjoint_union
