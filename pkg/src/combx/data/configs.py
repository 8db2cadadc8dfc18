import warnings

INVALID_OPS = ["error", "warn", "mute"]
DEFAULTS = {
    "budget": 10**8,
    "node_budget": 10**6,
    "upset_limit": 2**20,
    "partition_limit": 9,
    "threads": 1,
    "chunk_size": 2**14,
    "invalid_op": "warn",
}


class SearchConfigs:
    """
    An object that stores the budgets and limits shared by every search in :python:`combx`,
    e.g., the valuation budget of :func:`~combx.logic.validity.is_valid`
    or the node budget of :func:`~combx.logic.morphism.surjection_exists`.
    Any value not given falls back to its default.

    Args:
        budget (:python:`int`, *optional*):
            Maximal number of forcing-set evaluations of a validity search
            (default: :python:`10**8`).
        node_budget (:python:`int`, *optional*):
            Maximal number of backtracking nodes of a morphism or embedding search
            (default: :python:`10**6`).
        upset_limit (:python:`int`, *optional*):
            Maximal number of upsets that may be materialised for a single frame
            (default: :python:`2**20`).
        partition_limit (:python:`int`, *optional*):
            Largest frame on which bi-E-partitions are enumerated exhaustively
            (default: :python:`9`).
        threads (:python:`int`, *optional*):
            Number of worker threads; results never depend on it
            (default: :python:`1`).
        chunk_size (:python:`int`, *optional*):
            Number of valuations evaluated per batch
            (default: :python:`2**14`).
        invalid_op (:python:`str`, *optional*):
            Behavior on a soft violation ("error", "warn", "mute")
            (default: :python:`"warn"`).
    """

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"Unknown search config keys: {sorted(unknown)}.")
        values = {**DEFAULTS, **{k: v for k, v in kwargs.items() if v is not None}}

        if values["invalid_op"] not in INVALID_OPS:
            raise ValueError(f"Incorrect invalid_op is given: {values['invalid_op']}.")
        for key in ["budget", "node_budget", "upset_limit", "partition_limit", "threads", "chunk_size"]:
            if not isinstance(values[key], int) or values[key] < 1:
                raise ValueError(f"{key} must be a positive integer, got {values[key]}.")

        self.config_dict = values

    def __str__(self):
        strings = ["SearchConfigs"]
        for k, v in self.config_dict.items():
            strings.append(f"  {k}: {v}")
        return "\n".join(strings)

    def __getitem__(self, key):
        return self.config_dict[key]

    def __getattr__(self, key):
        config_dict = self.__dict__.get("config_dict", {})
        if key in config_dict:
            return config_dict[key]
        raise AttributeError(key)

    def replace(self, **kwargs):
        """
        Returns a copy with some values replaced.

        Returns:
            :class:`~combx.data.configs.SearchConfigs`: The updated configurations.
        """
        return SearchConfigs(**{**self.config_dict, **kwargs})

    def raise_warning(self, raisestring, error=Exception):
        match self.invalid_op:
            case "error":
                raise error(raisestring)
            case "warn":
                warnings.warn("Following operation is invalid: " + raisestring)
            case "mute":
                return
            case _:
                assert False


DEFAULT_CONFIGS = SearchConfigs()


def resolve_configs(configs):
    return DEFAULT_CONFIGS if configs is None else configs
