"""Registries of labelled subclasses.

A class deriving directly from ``Component`` owns a registry; its subclasses
join it with ``class Child(Base, label="name")``. Registration order is kept,
so listings come out in definition order.
"""

from abc import ABC, abstractmethod
import logging

logger = logging.getLogger(__name__)


class Component(ABC):
    registry = None
    label = None
    description = ""

    @abstractmethod
    def __init__(self):
        pass

    def __init_subclass__(cls, label=None, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.registry is None:
            cls.registry = {}
            cls.labels = cls.registry.keys()
            return
        if label is None:
            return
        if label in cls.registry:
            logger.warning(f"label '{label}' now refers to {cls.__name__} instead of {cls.registry[label].__name__}")
        cls.registry[label] = cls
        cls.label = label

    def __class_getitem__(cls, label):
        return cls.registry[label]

    @classmethod
    def create(cls, label, **kwargs):
        """Instance of the subclass registered as ``label``."""
        return cls.registry[label](**kwargs)

    @classmethod
    def describe(cls):
        """Mapping label -> description in registration order."""
        return {label: sub.description for label, sub in cls.registry.items()}
