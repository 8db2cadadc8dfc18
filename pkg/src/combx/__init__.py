from . import data, decide, draw, logic, utils
