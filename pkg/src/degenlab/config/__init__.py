# -*- coding: utf-8 -*-

"""
degenlab Config module
"""

import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from degenlab.arith.scalars import parse_scalar
from degenlab.errors import FixtureError, ParseError
from degenlab.io_tools import load_yaml

logger = logging.getLogger(__name__)

SETTINGS_ENV = "DEGENLAB_SETTINGS"
DEFAULT_SETTINGS_PATH = Path(__file__).parent / "settings.yaml"


class InvariantSettings(BaseModel):
    r_max: int = Field(default=4, ge=1)
    burde_indices: List[Tuple[int, int]] = Field(default_factory=lambda: [(1, 1), (1, 2), (2, 2)])
    max_burde_index: int = Field(default=4, ge=1)
    cache_size: int = Field(default=4096, ge=1)


class SearchSettings(BaseModel):
    degree_bound: int = Field(default=2, ge=0)
    coefficients: List[str] = Field(default_factory=lambda: ["1", "-1", "2", "-2", "1/2", "-1/2"])
    shapes: List[str] = Field(default_factory=lambda: ["diagonal"])

    @field_validator("coefficients")
    def coefficients_must_be_nonzero_scalars(cls, v):
        for text in v:
            try:
                value = parse_scalar(text)
            except ParseError as e:
                raise ValueError(str(e))
            if not value:
                raise ValueError("search coefficients must be nonzero")
        return v

    @field_validator("shapes")
    def shapes_must_be_known(cls, v):
        for shape in v:
            if shape not in ("diagonal", "triangular"):
                raise ValueError(f"unknown witness shape {shape!r}")
        return v

    def scalars(self) -> List[Fraction]:
        return [parse_scalar(text) for text in self.coefficients]


class ReproduceSettings(BaseModel):
    expect_errata: bool = True
    mutations_per_algebra: int = Field(default=5, ge=0)
    seed: int = 20180417


class Settings(BaseModel):
    invariants: InvariantSettings = Field(default_factory=InvariantSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    reproduce: ReproduceSettings = Field(default_factory=ReproduceSettings)


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """
    Load settings from a YAML file.

    Args:
        path: Settings file or URL. Defaults to $DEGENLAB_SETTINGS, then to
            the bundled settings.yaml.

    Returns:
        Settings: validated settings

    Raises:
        FileNotFoundError: If the settings file cannot be found
        FixtureError: If the file does not match the settings schema
    """
    if path is None:
        path = os.environ.get(SETTINGS_ENV) or DEFAULT_SETTINGS_PATH
    data = load_yaml(path) or {}
    try:
        settings = Settings.model_validate(data)
    except ValidationError as e:
        raise FixtureError(f"Invalid settings in {path}: {e}") from e
    logger.debug(f"Loaded settings from {path}")
    return settings
