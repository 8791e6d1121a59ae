from .cmd_hopf import hopf
from .cmd_act import act
from .cmd_demo import demo

__all__ = ['hopf', 'act', 'demo']
