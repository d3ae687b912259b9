from .json_format import JsonExporter
from .latex_format import LatexExporter

__all__ = ["JsonExporter", "LatexExporter"]
