from unittest.mock import create_autospec

from sepgroid.commands.session import Session
from sepgroid.consoles.basic_console import BasicConsole
from sepgroid.consoles.console import Console


class TestConsole:
    def test_basic_console_satisfies_the_protocol(self):
        console: Console = BasicConsole()

        assert callable(console.emit)
        assert callable(console.emit_error)

    def test_sessions_forward_to_their_console(self):
        console = create_autospec(Console, instance=True)
        session = Session(console)

        session.emit("no")
        session.emit_error("Unknown vertex 'x'")

        console.emit.assert_called_once_with("no")
        console.emit_error.assert_called_once_with("Unknown vertex 'x'")
