from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.core import config
from app.core.config import configure_logging
from app.routers import bounds, construct, number_theory, search, verify

configure_logging()

app = FastAPI(
    title="Antimagic Tolerance API",
    description="Tolerancia antimágica de estrellas dobles unidas con copias de P3",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=config.settings.ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
    expose_headers=["*"]
)


# Cotas
app.include_router(bounds.router, tags=["Cotas"])

# Construcciones y verificación
app.include_router(construct.router, tags=["Construcción"])
app.include_router(verify.router, tags=["Verificación"])

# Búsqueda exhaustiva
app.include_router(search.router, tags=["Búsqueda"])

# Teoría de números
app.include_router(number_theory.router, tags=["Teoría de números"])


@app.get("/", tags=["General"])
def root():
    return {"message": "Antimagic Tolerance API", "edge_cap": config.settings.EDGE_CAP}
