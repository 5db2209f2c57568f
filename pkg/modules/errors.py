class CavityTangleError(Exception):
    pass


class InvalidParameterError(CavityTangleError, ValueError):
    pass


class InvalidInputError(CavityTangleError, ValueError):
    pass


class ResourceError(CavityTangleError, MemoryError):
    pass


class NoFeatureError(CavityTangleError):
    pass
