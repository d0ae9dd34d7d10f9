"""Domain layer - models and protocols, independent of any algorithm."""
