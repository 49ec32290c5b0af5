"""Verification workbench for standard 2-Calabi-Yau categories of finite type."""

__version__ = "0.1.0"
