"""Corrected SHAP scores built on the WAXp characteristic function."""

from .scores import DEFAULT_SHAP_FEATURE_CAP, ScoreVector, char_fn, corrected_shap

__all__ = ['DEFAULT_SHAP_FEATURE_CAP', 'ScoreVector', 'char_fn', 'corrected_shap']
