"""Exact computation in the Malvenuto-Reutenauer and Loday-Ronco algebras,
with Catalan alternative tableaux and the # product on them."""

from .errors import ClosureViolation, InvalidArgument, InvalidWord, ParseError
from .formal import FormalSum
from .sharp import Embedding, embed, hash_product, hash_product_sum
from .lab import explore_correspondence, shape_census, verify_canopy_splitting
from .lr import canopy_split, lr_product, lr_product_sum, psi_star
from .perms import Permutation, instantiate, mr_product, mr_product_sum, standardize, updown
from .tableaux import (
    BLUE,
    RED,
    Tableau,
    cells,
    completions,
    enumerate_all,
    enumerate_tableaux,
    is_valid,
    transpose,
)
from .trees import (
    LEAF,
    BinaryTree,
    canopy,
    decode_tree,
    encode_tree,
    enumerate_trees,
    fiber,
    node,
    psi,
)

__version__ = "0.1.0"
