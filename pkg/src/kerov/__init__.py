"""Plancherel and Jack measures, Kerov's growth process, and the martingales built from character ratios."""
from kerov.errors import DisconnectedGraphError, DomainError, ResourceBoundError
from kerov.measures import jack_weight, plancherel_weight
from kerov.partitions import GrowthPath, Partition, format_partition, parse_partition, partitions_of

__all__ = [
    "DisconnectedGraphError",
    "DomainError",
    "GrowthPath",
    "Partition",
    "ResourceBoundError",
    "format_partition",
    "jack_weight",
    "parse_partition",
    "partitions_of",
    "plancherel_weight",
]
