# src/utils/__init__.py
# Diagram helpers shared by the tangle layer
