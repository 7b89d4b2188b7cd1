"""Exception hierarchy shared by every stage of the pipeline."""


class DistsimError(Exception):
    """Base class for all errors raised by distsim."""


class EmptyCorpusError(DistsimError, ValueError):
    pass


class MalformedInputError(DistsimError, ValueError):
    pass


class InvalidRuleError(DistsimError, ValueError):
    pass


class NoPairsError(DistsimError, ValueError):
    pass


class InconsistentTablesError(DistsimError, ValueError):
    pass


class TagError(DistsimError, ValueError):
    pass


class VocabularyError(DistsimError, KeyError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__("words not in vocabulary: " + ", ".join(self.missing))

    def __str__(self):
        return self.args[0]


class SelfPairError(DistsimError, ValueError):
    pass


class EmptyGraphError(DistsimError, ValueError):
    pass


class InsufficientDataError(DistsimError, ValueError):
    pass


class LexiconParseError(DistsimError, ValueError):
    def __init__(self, path, lineno, message):
        self.path = path
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {message}")
