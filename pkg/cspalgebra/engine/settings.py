"""Engine settings."""

from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class EngineSettings(BaseSettings):
    """Search caps and back-end choices for the algorithm engine."""

    model_config = SettingsConfigDict(
        env_prefix="ENGINE_",
        env_file=".env",
        extra="ignore",
    )

    # Homomorphism search
    variable_order: Literal["mrv", "index"] = "mrv"
    search_node_cap: int | None = None
    sat_solver: str = "g4"  # python-sat solver name

    # Products and cores
    power_cap: int = 1_000_000  # domain_size**n
    endomorphism_node_cap: int = 10_000_000

    # Polymorphism search
    indicator_cap: int = 2_000_000  # sum of domain_size**arity over symbols
    native_component_limit: int = 4_000  # larger components use the SAT back-end
    component_cap: int = 250_000
    pp_closure_max_tuples: int = 6

    # Consistency and obstructions
    cycle_enumeration_cap: int = 10_000
    lift_node_cap: int = 100_000

    # Edge-colouring gadgets
    edge_coloring_max_edges: int = 60  # native backtracking
    sat_edge_coloring_max_edges: int = 20_000
    gadget_exhaustive_patterns: int = 729  # 3**6; larger gadgets are checked up to colour permutation
    gadget_pattern_cap: int = 200_000
    gadget_certify_patterns: int = 6_561  # 3**8; larger composites are certified through their parts
    setter_max_pairs: int = 64


settings = EngineSettings()
