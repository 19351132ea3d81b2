"""Exact verification of iGKLO representations of shifted affine iquantum groups."""

import json

from ._iqgklo import (
    CONFIG_SCHEMA,
    REPORT_SCHEMA,
    IqgError,
    catalog_json,
    check_json,
    identities_json,
    image as _image,
    validate_json,
)

__all__ = ["CONFIG_SCHEMA", "REPORT_SCHEMA", "IqgError", "catalog", "check", "identities", "image", "validate"]


def _instance_arg(instance):
    return json.dumps(instance)


def catalog():
    """Built-in instances as dictionaries."""
    return json.loads(catalog_json())


def validate(instance="all"):
    """Resolve a catalog name, "all", or an instance dict into validated instances."""
    return json.loads(validate_json(_instance_arg(instance)))


def check(instance="all", **config):
    """Run the relation checks and return the structured report.

    Extra keyword arguments are config fields, e.g. relations="BB3",
    oracle={"trials": 5}, corruption={"drop_kappa": True}.
    """
    cfg = dict(config, instance=instance)
    return json.loads(check_json(json.dumps(cfg)))


def identities(**config):
    """Run the standalone identity suite."""
    cfg = dict(config)
    cfg.setdefault("instance", "sA1-v1-t0")
    return json.loads(identities_json(json.dumps(cfg)))


def image(instance, generator, node):
    """Normal form of B_node(u) or Xi_node(u); generator is "B" or "Xi", node is 1-based."""
    return _image(_instance_arg(instance), generator, node)
