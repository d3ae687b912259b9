from typing import Dict, List, Optional

from ..errors import PresentationError
from .operads import ASSOCIATIVE, INITIAL, UNITAL_ASSOCIATIVE, BaseOperad


class BaseRegistry:
    """Registry of the base operads presentation files may name"""

    def __init__(self):
        self._bases: Dict[str, BaseOperad] = {}
        self._initialize_builtin_bases()

    def _initialize_builtin_bases(self):
        """Initialize the registry with the built-in bases"""
        self.register(INITIAL)
        self.register(ASSOCIATIVE)
        self.register(UNITAL_ASSOCIATIVE)

    def register(self, base: BaseOperad) -> None:
        """Register a base operad under its name"""
        if base.name in self._bases:
            raise ValueError(f"Base operad '{base.name}' is already registered")
        self._bases[base.name] = base

    def get(self, name: str) -> Optional[BaseOperad]:
        return self._bases.get(name)

    def require(self, name: str) -> BaseOperad:
        base = self.get(name)
        if base is None:
            known = ", ".join(sorted(self._bases))
            raise PresentationError(f"Unknown base operad '{name}' (known: {known})")
        return base

    def exists(self, name: str) -> bool:
        return name in self._bases

    def list_bases(self) -> List[BaseOperad]:
        return list(self._bases.values())


# Global base registry instance
default_registry = BaseRegistry()
