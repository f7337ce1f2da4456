"""Exception types shared across the framework.

Every error raised by the library derives from FrameworkError so callers
can catch the whole family with one clause.  Engine-level failures that
are part of normal protocol flow (a refused request, a failed action
step) are modelled as outcome values, not exceptions; the classes below
cover contract violations and malformed inputs.
"""


class FrameworkError(Exception):
    """Base class for all agentcomm errors."""


# -- knowledge store ---------------------------------------------------------

class NonGroundStatement(FrameworkError):
    """A statement with a variable was passed where a ground triple is required."""


class UnitMismatch(FrameworkError):
    """Two numeric literals with different units were compared."""


# -- descriptions ------------------------------------------------------------

class ParseError(FrameworkError):
    """Description bytes are not well-formed JSON or miss a required field."""


class SchemaError(FrameworkError):
    """A description violates a structural invariant (Searle rule, FSM shape, ...)."""


class DanglingReference(FrameworkError):
    """A description refers to a name that is not in the linked set."""


class DuplicateName(FrameworkError):
    """Two descriptions in one link set share a name."""


class UnboundVariableInCompare(FrameworkError):
    """A compare clause was evaluated before its variable was bound."""


class UnboundVariableInEffect(FrameworkError):
    """An effect clause contains a variable the evaluation context cannot ground."""


# -- communicative act engine ------------------------------------------------

class UnknownCA(FrameworkError):
    """A CA instance names a communicative act that is not in the registry."""


class ContentSchemaMismatch(FrameworkError):
    """CA instance content does not match the act's declared content schema."""


# -- protocol engine ---------------------------------------------------------

class NoParticipants(FrameworkError):
    """A conversation was started with an empty participant list."""


class UnknownProtocol(FrameworkError):
    """The requested protocol is not in the linked registry."""


class NoProtocolForCA(FrameworkError):
    """No shipped protocol starts with the selected communicative act."""


class NoProposals(FrameworkError):
    """Proposal evaluation ran but no participant proposed."""


# -- action engine -----------------------------------------------------------

class MissingInput(FrameworkError):
    """An action was executed without one of its declared inputs."""


class TypeMismatch(FrameworkError):
    """An input value does not conform to the declared data type."""


class UnboundAtomicOp(FrameworkError):
    """An atomic process step has no host binding."""


# -- matchmaker / transport / scenario ---------------------------------------

class UnknownCapabilityClass(FrameworkError):
    """A registry entry names a capability class the data model does not know."""


class UnknownReceiver(FrameworkError):
    """A message was sent to an agent id that is not registered."""


class ConfigError(FrameworkError):
    """A scenario configuration is unusable; carries path and reason."""
