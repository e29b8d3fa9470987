# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Run configuration: pydantic models, config files and command-line overrides."""

import logging
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import pydantic
import yaml

from constants.claims import ALL_CLAIMS, CLAIMS
from constants.defaults import DEFAULT_LEVEL_BOUND, DEFAULT_N_MAX, DEFAULT_SAMPLES, DEFAULT_SEED, MAX_N_MAX
from constants.errors import CONFIG_FIELD, CONFIG_FILE, UNKNOWN_CLAIM
from exceptions import ConfigError
from instances import FilteredInstance, build_instance, get_instance
from search import SearchStrategy, StrategyKind

logger = logging.getLogger(__name__)


class StrategyConfig(pydantic.BaseModel):
    """Search strategy section."""

    kind: StrategyKind = StrategyKind.EXHAUSTIVE
    seed: int = DEFAULT_SEED
    samples: pydantic.conint(ge=1) = DEFAULT_SAMPLES  # type: ignore[valid-type]
    level_bound: pydantic.conint(ge=0) = DEFAULT_LEVEL_BOUND  # type: ignore[valid-type]

    class Config:
        """Reject unknown keys."""

        extra = "forbid"

    def to_strategy(self) -> SearchStrategy:
        """The search strategy this section describes."""
        return SearchStrategy(StrategyKind(self.kind), self.seed, self.samples, self.level_bound)


class InstanceSpec(pydantic.BaseModel):
    """Inline constructor call, as an alternative to a catalog id."""

    kind: str
    params: Dict[str, Any] = {}

    class Config:
        """Reject unknown keys."""

        extra = "forbid"


class RunConfig(pydantic.BaseModel):
    """One run of the checker.

    Attrs:
        instance: catalog id or inline constructor spec.
        checks: claim ids, or "all".
        strategy: search strategy section.
        output: report path; stdout when unset.
        expect: golden report to compare against.
        n_max: largest combination size for prop3.4.
    """

    instance: Union[str, InstanceSpec]
    checks: List[str] = [ALL_CLAIMS]
    strategy: StrategyConfig = StrategyConfig()
    output: Optional[str] = None
    expect: Optional[str] = None
    n_max: pydantic.conint(ge=1, le=MAX_N_MAX) = DEFAULT_N_MAX  # type: ignore[valid-type]

    class Config:
        """Reject unknown keys."""

        extra = "forbid"

    @pydantic.validator("checks", each_item=True)
    def _known_claim(cls, claim: str) -> str:  # noqa: N805
        if claim != ALL_CLAIMS and claim not in CLAIMS:
            raise ValueError(UNKNOWN_CLAIM.format(claim=claim))
        return claim

    def claims(self) -> Tuple[str, ...]:
        """Requested claims in canonical order, without repeats."""
        if ALL_CLAIMS in self.checks:
            return CLAIMS
        requested = set(self.checks)
        return tuple(claim for claim in CLAIMS if claim in requested)

    def build_instance(self) -> FilteredInstance:
        """The configured instance.

        Raises:
            ConfigError: for an unknown catalog id or constructor kind.
            BadParameterError: for constructor parameters outside their domain.
        """
        if isinstance(self.instance, str):
            return get_instance(self.instance)
        return build_instance(self.instance.kind, self.instance.params)


def _read(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as config_file:
            document = yaml.safe_load(config_file)
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(CONFIG_FILE.format(path=path, message=exc)) from exc
    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigError(CONFIG_FILE.format(path=path, message="top level must be a mapping"))
    return document


def _merge(document: Dict[str, Any], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    merged = dict(document)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, Mapping):
            section = merged.get(key)
            merged[key] = _merge(section if isinstance(section, dict) else {}, value)
        else:
            merged[key] = value
    return merged


def parse_config(document: Mapping[str, Any]) -> RunConfig:
    """Validate a config document.

    Raises:
        ConfigError: naming the first offending field.
    """
    try:
        return RunConfig.parse_obj(document)
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"] if part != "__root__")
        raise ConfigError(CONFIG_FIELD.format(field=field, message=first["msg"]), field) from exc


def load_config(path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Read a YAML or JSON config file, apply overrides field by field and validate.

    Args:
        path: config file, or None for overrides only.
        overrides: values taking precedence over the file; None values are ignored
            and mappings are merged into the matching section.

    Returns:
        the validated run configuration.

    Raises:
        ConfigError: when the file cannot be read or a field is invalid.
    """
    document = _read(path) if path else {}
    config = parse_config(_merge(document, overrides or {}))
    logger.debug("config: instance=%s checks=%s", config.instance, config.checks)
    return config
