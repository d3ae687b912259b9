from enum import Enum
from typing import List

from pydantic import BaseModel, Field


class NodeType(str, Enum):
    SUM = "sum"
    TERM = "term"
    LABEL = "label"
    IDENTITY = "identity"
    ZERO = "zero"
    COMPOSE = "compose"
    FULL = "full"
    BRACE = "brace"


class ASTNode(BaseModel):
    """Base class for all expression nodes"""
    node_type: NodeType
    line: int = Field(description="Line number in source")
    column: int = Field(description="Column number in source")


class LabelNode(ASTNode):
    """Reference to a generator by its label text"""
    text: str


class IdentityNode(ASTNode):
    """The operad identity ``id``"""


class ZeroNode(ASTNode):
    """The zero element ``0``"""


class ComposeNode(ASTNode):
    """Partial composition ``left oK right``"""
    left: ASTNode
    slot: int
    right: ASTNode


class FullCompositionNode(ASTNode):
    """Full composition ``head(a1, ..., an)``"""
    head: ASTNode
    args: List[ASTNode]


class BraceNode(ASTNode):
    """Brace ``head{a1, ..., an}``"""
    head: ASTNode
    args: List[ASTNode] = Field(default_factory=list)


class TermNode(ASTNode):
    """Signed integer multiple of a composite"""
    coeff: int
    body: ASTNode


class SumNode(ASTNode):
    """Sum of terms"""
    terms: List[TermNode]
