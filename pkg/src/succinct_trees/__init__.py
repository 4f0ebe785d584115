"""Succinct binary trees, balanced parentheses and range-minimum queries."""

from .bintree import SuccinctBinaryTree, build
from .bitvec import RankSelectBits, build_bits
from .bp import ParenSupport, build_paren
from .cartesian import OutputTape, RmqIndex, StreamState, build_rmq, build_stream, rmq
from .errors import (EmptyTreeError, InvalidNodeError, MalformedEncodingError,
                     NotFoundError, QueryRangeError, SuccinctError)
from .ordinal import Order, OrdinalTree
from .reference import LinkedBinaryTree, LinkedOrdinalTree, Variant

__all__ = [
    "EmptyTreeError", "InvalidNodeError", "LinkedBinaryTree", "LinkedOrdinalTree",
    "MalformedEncodingError", "NotFoundError", "Order", "OrdinalTree", "OutputTape",
    "ParenSupport", "QueryRangeError", "RankSelectBits", "RmqIndex", "StreamState",
    "SuccinctBinaryTree", "SuccinctError", "Variant", "build", "build_bits",
    "build_paren", "build_rmq", "build_stream", "rmq",
]

__version__ = "0.1.0"
