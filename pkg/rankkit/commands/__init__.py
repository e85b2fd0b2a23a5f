"""CLI commands: each module registers a subparser and its handler."""
