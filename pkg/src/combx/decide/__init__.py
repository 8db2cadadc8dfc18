from .structure import LfcReport, branching_bound_check, frame_F, validates_lfc
from .membership import (
    MembershipVerdict,
    TabularityVerdict,
    bound_is_adequate,
    comb_bound,
    in_logfc,
    locally_tabular,
    logfc_semidecide,
)
