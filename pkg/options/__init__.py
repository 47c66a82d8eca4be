"""This package options includes option modules: basic options (shared by every subcommand), verification options, and the options of the map subcommands."""
