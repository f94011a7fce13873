"""Ports - interfaces between the functional core and the imperative shell."""
