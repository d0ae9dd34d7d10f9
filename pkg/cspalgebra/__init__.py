"""cspalgebra - finite constraint satisfaction through polymorphisms."""

__version__ = "1.0.0"
