import logging
from abc import ABC


class CustomABC(ABC):
    """Base class with a label registry.

    Subclasses declare their own ``labels = {}`` and register children with
    ``@Base.register("label")``; ``Base["label"]`` returns the child.
    Used for config sections, file handlers and domains.
    """

    labels = {}

    @classmethod
    def register(cls, label):
        def decorator(obj):
            if label in cls.labels:
                logging.getLogger(__name__).warning(f"label '{label}' of {cls.__name__} registered twice")
            cls.labels[label] = obj
            obj.label = label
            return obj

        return decorator

    def __class_getitem__(cls, label):
        try:
            return cls.labels[label]
        except KeyError:
            raise KeyError(f"no {cls.__name__} registered as '{label}', valid: {sorted(cls.labels)}") from None
