"""Exact enumeration and singularity analysis for the five singular
quarter-plane walk models, via the iterated kernel method."""

from .models import ModelId, StepSet, InventoryCounts, step_set, inventory_counts

__all__ = [
    "ModelId",
    "StepSet",
    "InventoryCounts",
    "step_set",
    "inventory_counts",
]

__version__ = "0.1.0"
