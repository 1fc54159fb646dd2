"""Member/non-member dataset construction, AUC-ROC with bootstrap, and
token-level completion accuracy."""

from .datasets import MIDataset, build_dataset
from .roc import RocResult, auc_roc, bootstrap_auc, token_accuracy

__all__ = ["MIDataset", "RocResult", "auc_roc", "bootstrap_auc",
           "build_dataset", "token_accuracy"]
