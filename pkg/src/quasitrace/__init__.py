"""Exact and numeric verification of partition Eisenstein trace identities."""

from .arith import GaussianRational, Partition, bernoulli, divisor_sum, partition_length, partitions
from .qseries import PiScalar, QSeries
from .ahform import AHForm, lowering, tau_bar_limit
from .wseries import WSeries

__version__ = "0.1.0"

__all__ = [
    "AHForm", "GaussianRational", "Partition", "PiScalar", "QSeries", "WSeries",
    "bernoulli", "divisor_sum", "lowering", "partition_length", "partitions", "tau_bar_limit",
]
