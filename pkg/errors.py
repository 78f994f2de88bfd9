class TreeAlgError(ValueError):
    """Base class of every input or consistency error raised by treealg."""


class ArityMismatchError(TreeAlgError):
    pass


class AlphabetMismatchError(TreeAlgError):
    pass


class UnknownSymbolError(TreeAlgError):
    pass


class MalformedDocumentError(TreeAlgError):
    pass


class IncompleteRunError(TreeAlgError):
    pass


class InconsistentLanguagePairError(TreeAlgError):
    def __init__(self, report):
        super().__init__(f"Inconsistent language pair: {report.check}: {report.detail}")
        self.report = report


class UnreachableElementError(TreeAlgError):
    pass


class MissingTableEntryError(TreeAlgError):
    pass
