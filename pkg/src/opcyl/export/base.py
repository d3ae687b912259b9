import os
from abc import ABC, abstractmethod
from typing import Dict

from ..core.terms.element import Element


class Exporter(ABC):
    """Base class for element exporters"""

    file_suffix = ".txt"

    @abstractmethod
    def render(self, element: Element, name: str = "e", **options) -> str:
        """
        Render an element as text

        Args:
            element: The element to render
            name: A name for the element, used by formats that print one
            **options: Additional options for the exporter
        """
        pass

    def export(self, element: Element, output_path: str, name: str = "e", **options) -> None:
        """
        Export an element to a file

        Args:
            element: The element to export
            output_path: The path to write the output to
            name: A name for the element
            **options: Additional options for the exporter
        """
        with open(output_path, "w") as f:
            f.write(self.render(element, name, **options))

    def export_all(self, elements: Dict[str, Element], output_dir: str, **options) -> Dict[str, str]:
        """
        Export named elements, one file each

        Args:
            elements: A dictionary of names to elements
            output_dir: The directory to write the output to
            **options: Additional options for the exporter

        Returns:
            A dictionary of names to output file paths
        """
        file_suffix = options.pop("file_suffix", self.file_suffix)
        os.makedirs(output_dir, exist_ok=True)

        result = {}
        for name, element in elements.items():
            output_path = os.path.join(output_dir, f"{name}{file_suffix}")
            self.export(element, output_path, name, **options)
            result[name] = output_path
        return result
