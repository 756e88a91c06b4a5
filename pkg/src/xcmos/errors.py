"""Exception hierarchy shared by all benchmark modules."""


class XcmosError(Exception):
    pass


class InvalidParameterError(XcmosError, ValueError):
    pass


class ClassMismatchError(XcmosError, TypeError):
    pass


class ThermalStabilityError(InvalidParameterError):
    pass


class DegenerateGeometryError(InvalidParameterError):
    pass


class NoSwitchingError(XcmosError):
    """Drive current does not exceed the magnet's critical current."""


class SwitchingDelayCapError(NoSwitchingError):
    """Drive is supercritical but the resulting delay exceeds the cap."""


class NoMotionError(XcmosError):
    """Domain wall drive density at or below the depinning threshold."""


class StyleMismatchError(XcmosError):
    pass


class NotPipelinableError(XcmosError):
    pass


class LibraryParseError(XcmosError):
    pass


class LibraryValidationError(XcmosError):
    pass


class UnknownMetricError(XcmosError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnphysicalParameterWarning(UserWarning):
    pass
