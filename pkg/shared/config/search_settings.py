"""Limits for the brute-force oracles and exhaustive searches."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class SearchSettings(BaseSettings):
    """Search and enumeration limits.

    Every exhaustive procedure checks its input size against one of these
    before starting; the values can be raised through the environment.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    BRUTE_FORCE_LIMIT: int = Field(
        default=16,
        description="Largest ground set converted to an explicit basis family",
    )
    ISOMORPHISM_LIMIT: int = Field(
        default=10,
        description="Largest ground set accepted by the isomorphism test",
    )
    MINOR_ORACLE_LIMIT: int = Field(
        default=10,
        description="Largest ground set of the larger matroid in oracle minor search",
    )
    BRANCH_WIDTH_LIMIT: int = Field(
        default=8,
        description="Largest ground set for exact branch-width",
    )
    PRESENTATION_SEARCH_LIMIT: int = Field(
        default=10,
        description="Largest ground set for presentation discovery",
    )
    MINOR_SEARCH_LIMIT: int = Field(
        default=14,
        description="Largest presentation accepted by the containment search",
    )
    POSET_ITEM_LIMIT: int = Field(
        default=40,
        description="Most items in a minor poset",
    )
    ANTICHAIN_LIMIT: int = Field(
        default=30,
        description="Most items for exact maximum anti-chain",
    )
    EXCHANGE_CHECK_LIMIT: int = Field(
        default=2000,
        description="Basis count above which basis-exchange validation is skipped",
    )
    RANDOM_SEED: int = Field(
        default=0,
        description="Seed for random presentation samples",
    )


@lru_cache()
def get_search_settings() -> SearchSettings:
    """Get cached search settings."""
    return SearchSettings()
