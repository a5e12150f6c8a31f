from .cli import GLOBAL_CONTEXT_SETTINGS, print_version, KeyValueParamType
from .log import configure_logging, get_log_level, LOG_ENV
from .units import db_to_linear, linear_to_db
